#include "tightframe/frames.hpp"

#include <sstream>

#include "tightframe/error.hpp"

namespace tightframe {

FrameReport analyze_frame(const ComplexMatrix& F, double tol, double rank_tol) {
  const SvdResult s = svd(F, rank_tol);
  if (s.rank == 0) {
    throw DomainError("no frame: vectors do not span a subspace");
  }
  FrameReport rep;
  rep.singular_values = s.singular_values;
  rep.rank = s.rank;
  rep.upper_bound = s.singular_values(0);
  rep.lower_bound = s.singular_values(s.rank - 1);
  rep.redundancy = static_cast<double>(F.cols()) / s.rank;
  rep.is_tight = rep.relative_spread() <= tol;
  if (rep.is_tight) rep.beta = rep.upper_bound;
  return rep;
}

ComplexVector expansion_coefficients(const ComplexMatrix& F, double beta, const ComplexVector& x,
                                     const ExpansionOptions& opts) {
  require_finite(F, "expansion_coefficients");
  if (x.size() != F.rows()) {
    std::ostringstream os;
    os << "expansion_coefficients: vector has " << x.size() << " entries, frame has "
       << F.rows() << " rows";
    throw DomainError(os.str());
  }
  if (!(beta > 0.0)) throw DomainError("expansion_coefficients: beta must be positive");

  const ComplexMatrix P = projector_onto_range(F, opts.rank_tol);
  ComplexVector in_range = P * x;
  const double residual = (x - in_range).norm();
  if (!opts.project && residual > opts.tol * std::max(1.0, x.norm())) {
    std::ostringstream os;
    os << "expansion_coefficients: x has a component of norm " << residual
       << " outside the frame subspace";
    throw DomainError(os.str());
  }
  const ComplexVector& target = opts.project ? in_range : x;
  return F.adjoint() * target / (beta * beta);
}

ComplexVector reconstruct(const ComplexMatrix& F, const ComplexVector& a) {
  if (a.size() != F.cols()) {
    std::ostringstream os;
    os << "reconstruct: " << a.size() << " coefficients for " << F.cols() << " frame vectors";
    throw DomainError(os.str());
  }
  return F * a;
}

}  // namespace tightframe
