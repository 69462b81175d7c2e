// lsf.hpp — least-squares tight frames.
//
// Given vectors phi_i (columns of Phi, k x n, rank r, singular values sigma_i),
// the tight frame F minimising sum_i |phi_i - f_i|^2 subject to
// F F^* = scale^2 P_U is scale * U Z_r V^*:
//   constrained   (clsf):  scale = beta0 fixed,              E = sum (beta0 - sigma_i)^2
//   unconstrained (ulsf):  scale = alpha = mean(sigma_i),    E = Tr(Phi^* Phi) - r alpha^2
//   canonical:             scale = 1, F = Phi ((Phi^* Phi)^{1/2})^dagger
// All three share a single kernel, and so differ only in the scale factor.

#pragma once

#include "tightframe/matcore.hpp"

namespace tightframe {

struct LsfResult {
  ComplexMatrix frame;
  double scale = 1.0;
  double residual = 0.0;
  RealVector singular_values;
  int rank = 0;
};

// Phi = H Y, H^* H = I_n, Y = (Phi^* Phi)^{1/2}; projected_isometry = P_U H.
// For a truncated decomposition H and projected_isometry coincide.
struct PolarFactors {
  ComplexMatrix isometry_part;
  ComplexMatrix hermitian_part;
  ComplexMatrix projected_isometry;
};

// Tr((Phi - F)^* (Phi - F)).
double squared_error(const ComplexMatrix& Phi, const ComplexMatrix& F);

LsfResult clsf(const ComplexMatrix& Phi, double beta0, double rank_tol = kDefaultRankTol);
LsfResult ulsf(const ComplexMatrix& Phi, double rank_tol = kDefaultRankTol);
ComplexMatrix canonical(const ComplexMatrix& Phi, double rank_tol = kDefaultRankTol);

// Frame kernel for an externally supplied SVD (any valid choice of singular
// vectors gives the same result).
LsfResult clsf(const ComplexMatrix& Phi, const SvdResult& s, double beta0);

// Requires rows >= cols.
PolarFactors polar(const ComplexMatrix& Phi, double rank_tol = kDefaultRankTol);

// Order-p truncated polar decomposition, 1 <= p <= rank:
// P_{U_p} Phi = [U Z_p V^*] [V Sigma^* Z_p V^*].
PolarFactors tpd(const ComplexMatrix& Phi, int p, double rank_tol = kDefaultRankTol);

}  // namespace tightframe
