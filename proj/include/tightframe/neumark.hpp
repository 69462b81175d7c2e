// neumark.hpp — lift a tight frame to an equal-norm orthogonal set in a
// (possibly larger) space whose projection back onto the frame subspace
// recovers the original frame.

#pragma once

#include <string>

#include "tightframe/frames.hpp"
#include "tightframe/matcore.hpp"

namespace tightframe {

enum class ExtensionCase {
  WithinSpace,    // rows >= cols: the orthogonal set lives in the original space
  ExpandedSpace,  // rows < cols: the space is padded with zero rows up to cols
};

struct NeumarkExtension {
  ComplexMatrix extended;            // max(k, n) x n, equal-norm orthogonal columns
  ComplexMatrix embedded_original;   // original frame zero-padded to max(k, n) rows
  double beta = 1.0;
  ExtensionCase case_tag = ExtensionCase::WithinSpace;
};

struct ExtensionCheck {
  bool ok = false;
  double gram_error = 0.0;        // |F~^* F~ - beta^2 I|_F
  double projection_error = 0.0;  // |P_U F~ - F|_F
  std::string diagnostic;

  explicit operator bool() const { return ok; }
};

// Uses the inherent scale beta of F; never renormalises.
NeumarkExtension extend(const ComplexMatrix& F, double tight_tol = kDefaultTightTol,
                        double rank_tol = kDefaultRankTol);

// Checks F~^* F~ = beta^2 I and P_U F~ = F (padded), both in Frobenius norm
// against tol * max(1, beta^2).
ExtensionCheck verify_extension(const ComplexMatrix& F, const NeumarkExtension& ext, double tol,
                                double rank_tol = kDefaultRankTol);

// Completes the orthonormal columns of Q to a unitary of the same row count by
// Gram-Schmidt over the canonical basis, skipping candidates whose residual
// norm is below 1e-8.
ComplexMatrix complete_orthonormal_basis(const ComplexMatrix& Q);

}  // namespace tightframe
