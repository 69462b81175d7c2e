// quantum.hpp — rank-one POVMs represented by their measurement matrix M
// (columns mu_i, M M^* = P_U), outcome probabilities, detection error, the
// least-squares measurement and seeded outcome sampling.

#pragma once

#include <cstdint>
#include <vector>

#include "tightframe/frames.hpp"
#include "tightframe/matcore.hpp"

namespace tightframe {

struct MeasurementMatrix {
  ComplexMatrix matrix;              // k x n, columns are measurement vectors
  ComplexMatrix subspace_projector;  // P_U, k x k
};

// M = F / beta for a tight frame F.
MeasurementMatrix povm_from_frame(const ComplexMatrix& F, double tight_tol = kDefaultTightTol,
                                  double rank_tol = kDefaultRankTol);

// p(i) = |<mu_i, phi>|^2. phi must be a unit vector inside the measured subspace.
std::vector<double> probabilities(const MeasurementMatrix& M, const ComplexVector& phi,
                                  double tol = 1e-9);

// P_e = 1 - (1/n) sum_i |<mu_i, phi_i>|^2 for unit-norm state columns phi_i.
double detection_error(const MeasurementMatrix& M, const ComplexMatrix& states,
                       double tol = 1e-9);

// Least-squares measurement: the normalised tight frame closest to the states.
MeasurementMatrix lsm(const ComplexMatrix& states, double rank_tol = kDefaultRankTol);

// Draws `trials` outcomes from probabilities(M, phi).
//
// Generator: std::mt19937_64 seeded with `seed` (MT19937-64 reference
// constants). Each draw takes one 64-bit output x, forms u = (x >> 11) * 2^-53
// in [0, 1), and returns the first outcome i whose cumulative probability
// (normalised by the total) exceeds u. Identical inputs give identical counts.
std::vector<std::uint64_t> sample_outcomes(const MeasurementMatrix& M, const ComplexVector& phi,
                                           std::uint64_t trials, std::uint64_t seed,
                                           double tol = 1e-9);

}  // namespace tightframe
