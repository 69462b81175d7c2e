// matcore.hpp — dense complex linear algebra used by every frame construction:
// SVD with a deterministic phase convention, numerical rank, range projectors,
// Hermitian square roots and the pseudo-inverse of the Gram square root.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>

namespace tightframe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-10;

// Full SVD A = U diag(sigma) V*. U is k x k, V is n x n, sigma has min(k, n)
// entries in descending order; `rank` of them exceed the rank tolerance.
struct SvdResult {
  ComplexMatrix U;
  RealVector singular_values;
  ComplexMatrix V;
  int rank = 0;
};

// Throws DomainError if A is empty or has a non-finite entry.
void require_finite(const ComplexMatrix& A, const std::string& what);

// Phase convention: for each of the first `rank` pairs, the first entry of
// largest magnitude in the right-singular vector is real and nonnegative and
// the left vector gets the same rotation. Null-space vectors on either side
// are normalised on their own so their first non-negligible entry is real and
// positive.
SvdResult svd(const ComplexMatrix& A, double rank_tol = kDefaultRankTol);

// Number of values strictly greater than tol * max(values[0], 1).
int rank_eps(std::span<const double> singular_values, double tol);
int rank_eps(const RealVector& singular_values, double tol);

// sum_{i<p} u_i v_i^*  (the matrix U Z_p V^*).
ComplexMatrix partial_isometry(const SvdResult& s, int p);

// P = sum_{i<r} u_i u_i^*.
ComplexMatrix projector_onto_range(const ComplexMatrix& A, double rank_tol = kDefaultRankTol);
ComplexMatrix projector_onto_range(const SvdResult& s);

// ((A^* A)^{1/2})^dagger = V diag(1/sigma_i, i < r) V^*.
ComplexMatrix gram_sqrt_pinv(const ComplexMatrix& A, double rank_tol = kDefaultRankTol);
ComplexMatrix gram_sqrt_pinv(const SvdResult& s);

// Hermitian PSD square root. Eigenvalues within tol * max(1, lambda_max) of zero
// are clamped; anything more negative is a DomainError.
ComplexMatrix herm_sqrt(const ComplexMatrix& P, double tol = kDefaultRankTol);

bool is_hermitian(const ComplexMatrix& P, double tol);

}  // namespace tightframe
