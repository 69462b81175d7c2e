#include "tightframe/lsf.hpp"

#include <cmath>
#include <sstream>

#include "tightframe/error.hpp"

namespace tightframe {

namespace {

// Closed-form residuals must agree with the direct Frobenius error.
constexpr double kResidualCrossCheck = 1e-8;

void require_nonzero(const SvdResult& s, const char* what) {
  if (s.rank == 0) throw DomainError(std::string(what) + ": input matrix is zero");
}

void cross_check(const char* what, double closed_form, double direct, double scale) {
  if (std::abs(closed_form - direct) > kResidualCrossCheck * std::max(1.0, scale)) {
    std::ostringstream os;
    os << what << ": closed-form residual " << closed_form << " disagrees with direct error "
       << direct;
    throw NumericalError(os.str());
  }
}

}  // namespace

double squared_error(const ComplexMatrix& Phi, const ComplexMatrix& F) {
  if (Phi.rows() != F.rows() || Phi.cols() != F.cols()) {
    std::ostringstream os;
    os << "squared_error: shapes " << Phi.rows() << "x" << Phi.cols() << " and " << F.rows()
       << "x" << F.cols() << " differ";
    throw DomainError(os.str());
  }
  return (Phi - F).squaredNorm();
}

LsfResult clsf(const ComplexMatrix& Phi, const SvdResult& s, double beta0) {
  if (!(beta0 > 0.0)) throw DomainError("clsf: beta0 must be positive");
  require_nonzero(s, "clsf");
  LsfResult out;
  out.rank = s.rank;
  out.scale = beta0;
  out.singular_values = s.singular_values;
  out.frame = beta0 * partial_isometry(s, s.rank);
  out.residual = (beta0 - s.singular_values.head(s.rank).array()).square().sum();
  cross_check("clsf", out.residual, squared_error(Phi, out.frame), Phi.squaredNorm());
  return out;
}

LsfResult clsf(const ComplexMatrix& Phi, double beta0, double rank_tol) {
  if (!(beta0 > 0.0)) throw DomainError("clsf: beta0 must be positive");
  return clsf(Phi, svd(Phi, rank_tol), beta0);
}

LsfResult ulsf(const ComplexMatrix& Phi, double rank_tol) {
  const SvdResult s = svd(Phi, rank_tol);
  require_nonzero(s, "ulsf");
  const auto sigma = s.singular_values.head(s.rank).array();
  const double alpha = sigma.mean();

  LsfResult out;
  out.rank = s.rank;
  out.scale = alpha;
  out.singular_values = s.singular_values;
  out.frame = alpha * partial_isometry(s, s.rank);
  out.residual = (alpha - sigma).square().sum();
  const double trace_form = Phi.squaredNorm() - s.rank * alpha * alpha;
  cross_check("ulsf", out.residual, trace_form, Phi.squaredNorm());
  cross_check("ulsf", out.residual, squared_error(Phi, out.frame), Phi.squaredNorm());
  return out;
}

ComplexMatrix canonical(const ComplexMatrix& Phi, double rank_tol) {
  return clsf(Phi, 1.0, rank_tol).frame;
}

PolarFactors polar(const ComplexMatrix& Phi, double rank_tol) {
  if (Phi.rows() < Phi.cols()) {
    std::ostringstream os;
    os << "polar: needs rows >= cols, got " << Phi.rows() << "x" << Phi.cols()
       << "; use canonical/clsf for the projected isometry";
    throw DomainError(os.str());
  }
  const SvdResult s = svd(Phi, rank_tol);
  const auto n = static_cast<int>(Phi.cols());
  PolarFactors out;
  out.isometry_part = partial_isometry(s, n);
  // V diag(sigma) V^*, i.e. (Phi^* Phi)^{1/2} taken from the SVD directly.
  out.hermitian_part = s.V * s.singular_values.cast<Complex>().asDiagonal() * s.V.adjoint();
  out.projected_isometry = partial_isometry(s, s.rank);
  return out;
}

PolarFactors tpd(const ComplexMatrix& Phi, int p, double rank_tol) {
  const SvdResult s = svd(Phi, rank_tol);
  if (p < 1 || p > s.rank) {
    std::ostringstream os;
    os << "tpd: order " << p << " outside 1.." << s.rank;
    throw DomainError(os.str());
  }
  const auto Vp = s.V.leftCols(p);
  PolarFactors out;
  out.isometry_part = partial_isometry(s, p);
  out.hermitian_part = Vp * s.singular_values.head(p).cast<Complex>().asDiagonal() * Vp.adjoint();
  out.projected_isometry = out.isometry_part;
  return out;
}

}  // namespace tightframe
