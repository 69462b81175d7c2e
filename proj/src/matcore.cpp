#include "tightframe/matcore.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tightframe/error.hpp"

namespace tightframe {

namespace {

std::string dims(const ComplexMatrix& A) {
  std::ostringstream os;
  os << A.rows() << "x" << A.cols();
  return os.str();
}

// Unit phase that rotates the first entry of (near-)largest magnitude onto the
// nonnegative real axis. Near-ties are resolved towards the lower index so that
// rounding noise cannot flip the pivot.
Complex normalising_phase(const Eigen::Ref<const ComplexVector>& v) {
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return Complex(1.0, 0.0);
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    const double mag = std::abs(v(j));
    if (mag >= largest * (1.0 - 1e-9)) return std::conj(v(j)) / mag;
  }
  return Complex(1.0, 0.0);
}

// Unit phase that makes the first non-negligible entry real and positive.
Complex leading_phase(const Eigen::Ref<const ComplexVector>& v) {
  const double largest = v.cwiseAbs().maxCoeff();
  if (largest == 0.0) return Complex(1.0, 0.0);
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    const double mag = std::abs(v(j));
    if (mag > largest * 1e-8) return std::conj(v(j)) / mag;
  }
  return Complex(1.0, 0.0);
}

}  // namespace

void require_finite(const ComplexMatrix& A, const std::string& what) {
  if (A.rows() == 0 || A.cols() == 0) {
    throw DomainError(what + ": matrix must have at least one row and one column");
  }
  if (!A.allFinite()) {
    throw DomainError(what + ": matrix " + dims(A) + " has non-finite entries");
  }
}

SvdResult svd(const ComplexMatrix& A, double rank_tol) {
  require_finite(A, "svd");
  Eigen::JacobiSVD<ComplexMatrix> jsvd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);

  SvdResult out;
  out.U = jsvd.matrixU();
  out.V = jsvd.matrixV();
  out.singular_values = jsvd.singularValues();
  if (!out.U.allFinite() || !out.V.allFinite() || !out.singular_values.allFinite()) {
    throw NumericalError("svd: kernel failed to converge for " + dims(A) + " matrix");
  }

  const Eigen::Index m = out.singular_values.size();
  out.rank = rank_eps(out.singular_values, rank_tol);
  for (Eigen::Index i = 0; i < out.rank; ++i) {
    const Complex phase = normalising_phase(out.V.col(i));
    out.V.col(i) *= phase;
    out.U.col(i) *= phase;
  }
  for (Eigen::Index i = out.rank; i < out.V.cols(); ++i) out.V.col(i) *= leading_phase(out.V.col(i));
  for (Eigen::Index i = out.rank; i < out.U.cols(); ++i) out.U.col(i) *= leading_phase(out.U.col(i));

  // Reconstruction guard: the kernel must reproduce A to working precision.
  ComplexMatrix sigma = ComplexMatrix::Zero(A.rows(), A.cols());
  for (Eigen::Index i = 0; i < m; ++i) sigma(i, i) = out.singular_values(i);
  const double err = (out.U * sigma * out.V.adjoint() - A).norm();
  if (!(err <= 1e-8 * std::max(1.0, A.norm()))) {
    throw NumericalError("svd: reconstruction error " + std::to_string(err) + " for " +
                         dims(A) + " matrix");
  }
  return out;
}

int rank_eps(std::span<const double> singular_values, double tol) {
  if (singular_values.empty()) return 0;
  const double threshold = tol * std::max(singular_values.front(), 1.0);
  return static_cast<int>(std::count_if(singular_values.begin(), singular_values.end(),
                                         [threshold](double s) { return s > threshold; }));
}

int rank_eps(const RealVector& singular_values, double tol) {
  return rank_eps(std::span<const double>(singular_values.data(),
                                          static_cast<std::size_t>(singular_values.size())),
                  tol);
}

ComplexMatrix partial_isometry(const SvdResult& s, int p) {
  return s.U.leftCols(p) * s.V.leftCols(p).adjoint();
}

ComplexMatrix projector_onto_range(const SvdResult& s) {
  return s.U.leftCols(s.rank) * s.U.leftCols(s.rank).adjoint();
}

ComplexMatrix projector_onto_range(const ComplexMatrix& A, double rank_tol) {
  return projector_onto_range(svd(A, rank_tol));
}

ComplexMatrix gram_sqrt_pinv(const SvdResult& s) {
  const auto Vr = s.V.leftCols(s.rank);
  RealVector inv = s.singular_values.head(s.rank).cwiseInverse();
  return Vr * inv.cast<Complex>().asDiagonal() * Vr.adjoint();
}

ComplexMatrix gram_sqrt_pinv(const ComplexMatrix& A, double rank_tol) {
  return gram_sqrt_pinv(svd(A, rank_tol));
}

bool is_hermitian(const ComplexMatrix& P, double tol) {
  if (P.rows() != P.cols()) return false;
  return (P - P.adjoint()).norm() <= tol * std::max(1.0, P.norm());
}

ComplexMatrix herm_sqrt(const ComplexMatrix& P, double tol) {
  require_finite(P, "herm_sqrt");
  if (P.rows() != P.cols()) {
    throw DomainError("herm_sqrt: matrix is " + dims(P) + ", expected square");
  }
  if (!is_hermitian(P, 1e-8)) {
    throw DomainError("herm_sqrt: matrix is not Hermitian");
  }
  const ComplexMatrix sym = 0.5 * (P + P.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("herm_sqrt: eigensolver failed for " + dims(P) + " matrix");
  }
  RealVector lambda = eig.eigenvalues();
  const double floor = tol * std::max(1.0, lambda.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (lambda(i) < -floor) {
      std::ostringstream os;
      os << "herm_sqrt: eigenvalue " << lambda(i) << " is negative; matrix is not PSD";
      throw DomainError(os.str());
    }
    lambda(i) = lambda(i) <= floor ? 0.0 : std::sqrt(lambda(i));
  }
  const ComplexMatrix& Q = eig.eigenvectors();
  return Q * lambda.cast<Complex>().asDiagonal() * Q.adjoint();
}

}  // namespace tightframe
