"""Tight frames, least-squares frames and rank-one measurements."""

from ._tightframe import (
    DomainError,
    FrameReport,
    NumericalError,
    analyze_frame,
    canonical,
    clsf,
    detection_error,
    expansion_coefficients,
    gu_canonical,
    gu_set,
    lsm,
    neumark_extension,
    polar,
    probabilities,
    read_matrix,
    sample,
    tpd,
    ulsf,
    write_matrix,
)

__all__ = [
    "DomainError",
    "FrameReport",
    "NumericalError",
    "analyze_frame",
    "canonical",
    "clsf",
    "detection_error",
    "expansion_coefficients",
    "gu_canonical",
    "gu_set",
    "lsm",
    "neumark_extension",
    "polar",
    "probabilities",
    "read_matrix",
    "sample",
    "tpd",
    "ulsf",
    "write_matrix",
]
