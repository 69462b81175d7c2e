// frames.hpp — tight-frame verification, frame bounds, redundancy and the
// minimal-norm expansion in a tight frame.

#pragma once

#include <optional>

#include "tightframe/matcore.hpp"

namespace tightframe {

inline constexpr double kDefaultTightTol = 1e-8;

// Frame bounds are taken on the subspace spanned by the columns, so a
// rank-deficient frame matrix is never an error in itself.
struct FrameReport {
  bool is_tight = false;
  std::optional<double> beta;  // set only when is_tight
  double lower_bound = 0.0;    // smallest nonzero singular value
  double upper_bound = 0.0;    // largest singular value
  int rank = 0;
  double redundancy = 0.0;     // columns / rank
  RealVector singular_values;

  // (upper - lower) / upper
  double relative_spread() const { return (upper_bound - lower_bound) / upper_bound; }
};

// Tight iff (sigma_max - sigma_min_nonzero) / sigma_max <= tol.
FrameReport analyze_frame(const ComplexMatrix& F, double tol = kDefaultTightTol,
                          double rank_tol = kDefaultRankTol);

struct ExpansionOptions {
  double tol = 1e-9;     // allowed residual of x outside range(F), relative to max(1, |x|)
  bool project = false;  // project x onto range(F) instead of rejecting it
  double rank_tol = kDefaultRankTol;
};

// a = beta^{-2} F^* x, the minimal-norm coefficients reconstructing x.
ComplexVector expansion_coefficients(const ComplexMatrix& F, double beta, const ComplexVector& x,
                                     const ExpansionOptions& opts = {});

// F a
ComplexVector reconstruct(const ComplexMatrix& F, const ComplexVector& a);

}  // namespace tightframe
