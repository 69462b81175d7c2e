#include "tightframe/neumark.hpp"

#include <sstream>

#include "tightframe/error.hpp"

namespace tightframe {

namespace {

constexpr double kCompletionSkip = 1e-8;

ComplexMatrix pad_rows(const ComplexMatrix& A, Eigen::Index rows) {
  ComplexMatrix out = ComplexMatrix::Zero(rows, A.cols());
  out.topRows(A.rows()) = A;
  return out;
}

}  // namespace

ComplexMatrix complete_orthonormal_basis(const ComplexMatrix& Q) {
  const Eigen::Index dim = Q.rows();
  ComplexMatrix basis(dim, dim);
  Eigen::Index filled = Q.cols();
  basis.leftCols(filled) = Q;
  for (Eigen::Index j = 0; j < dim && filled < dim; ++j) {
    ComplexVector cand = ComplexVector::Unit(dim, j);
    // two passes of classical Gram-Schmidt
    for (int pass = 0; pass < 2; ++pass) {
      const auto known = basis.leftCols(filled);
      cand -= known * (known.adjoint() * cand);
    }
    const double norm = cand.norm();
    if (norm < kCompletionSkip) continue;
    basis.col(filled++) = cand / norm;
  }
  if (filled != dim) {
    throw NumericalError("complete_orthonormal_basis: could not complete basis");
  }
  return basis;
}

NeumarkExtension extend(const ComplexMatrix& F, double tight_tol, double rank_tol) {
  const FrameReport rep = analyze_frame(F, tight_tol, rank_tol);
  if (!rep.is_tight) {
    std::ostringstream os;
    os << "neumark: frame is not tight (bounds " << rep.lower_bound << " .. " << rep.upper_bound
       << ", relative spread " << rep.relative_spread() << ")";
    throw DomainError(os.str());
  }
  const SvdResult s = svd(F, rank_tol);
  const Eigen::Index k = F.rows();
  const Eigen::Index n = F.cols();

  NeumarkExtension ext;
  ext.beta = *rep.beta;
  if (k >= n) {
    ext.case_tag = ExtensionCase::WithinSpace;
    ext.embedded_original = F;
    ext.extended = ext.beta * partial_isometry(s, static_cast<int>(n));
  } else {
    ext.case_tag = ExtensionCase::ExpandedSpace;
    ext.embedded_original = pad_rows(F, n);
    const ComplexMatrix known = pad_rows(s.U.leftCols(s.rank), n);
    const ComplexMatrix U_ext = complete_orthonormal_basis(known);
    ext.extended = ext.beta * U_ext * s.V.adjoint();
  }
  return ext;
}

ExtensionCheck verify_extension(const ComplexMatrix& F, const NeumarkExtension& ext, double tol,
                                double rank_tol) {
  ExtensionCheck check;
  const ComplexMatrix& Ft = ext.extended;
  const ComplexMatrix& E = ext.embedded_original;
  if (Ft.cols() != F.cols() || E.cols() != F.cols() || E.rows() != Ft.rows() ||
      E.rows() < F.rows()) {
    check.diagnostic = "dimension mismatch between frame and extension";
    return check;
  }
  if ((E.topRows(F.rows()) - F).norm() > tol || E.bottomRows(E.rows() - F.rows()).norm() > tol) {
    check.diagnostic = "embedded original is not the zero-padded frame";
    return check;
  }
  const double b2 = ext.beta * ext.beta;
  const double scale = std::max(1.0, b2);
  const auto n = Ft.cols();
  check.gram_error = (Ft.adjoint() * Ft - b2 * ComplexMatrix::Identity(n, n)).norm();
  const ComplexMatrix P = projector_onto_range(E, rank_tol);
  check.projection_error = (P * Ft - E).norm();

  std::ostringstream os;
  os << "gram error " << check.gram_error << ", projection error " << check.projection_error
     << ", tolerance " << tol * scale;
  check.diagnostic = os.str();
  check.ok = check.gram_error <= tol * scale && check.projection_error <= tol * scale;
  return check;
}

}  // namespace tightframe
