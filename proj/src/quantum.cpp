#include "tightframe/quantum.hpp"

#include <random>
#include <sstream>

#include "tightframe/error.hpp"
#include "tightframe/lsf.hpp"

namespace tightframe {

MeasurementMatrix povm_from_frame(const ComplexMatrix& F, double tight_tol, double rank_tol) {
  const FrameReport rep = analyze_frame(F, tight_tol, rank_tol);
  if (!rep.is_tight) {
    std::ostringstream os;
    os << "povm_from_frame: frame is not tight (relative spread " << rep.relative_spread() << ")";
    throw DomainError(os.str());
  }
  return {F / *rep.beta, projector_onto_range(F, rank_tol)};
}

namespace {

void check_state(const MeasurementMatrix& M, const ComplexVector& phi, double tol,
                 const char* what) {
  if (phi.size() != M.matrix.rows()) {
    std::ostringstream os;
    os << what << ": state has " << phi.size() << " entries, measurement acts on "
       << M.matrix.rows();
    throw DomainError(os.str());
  }
  if (std::abs(phi.norm() - 1.0) > tol) {
    std::ostringstream os;
    os << what << ": state norm " << phi.norm() << " is not 1";
    throw DomainError(os.str());
  }
  const double leak = (M.subspace_projector * phi - phi).norm();
  if (leak > tol) {
    std::ostringstream os;
    os << what << ": state has a component of norm " << leak << " outside the measured subspace";
    throw DomainError(os.str());
  }
}

}  // namespace

std::vector<double> probabilities(const MeasurementMatrix& M, const ComplexVector& phi,
                                  double tol) {
  check_state(M, phi, tol, "probabilities");
  const ComplexVector amp = M.matrix.adjoint() * phi;
  std::vector<double> p(static_cast<std::size_t>(amp.size()));
  for (Eigen::Index i = 0; i < amp.size(); ++i) p[static_cast<std::size_t>(i)] = std::norm(amp(i));
  return p;
}

double detection_error(const MeasurementMatrix& M, const ComplexMatrix& states, double tol) {
  if (states.cols() != M.matrix.cols()) {
    std::ostringstream os;
    os << "detection_error: " << states.cols() << " states for " << M.matrix.cols()
       << " measurement vectors";
    throw DomainError(os.str());
  }
  if (states.rows() != M.matrix.rows()) {
    throw DomainError("detection_error: state dimension does not match measurement");
  }
  double hit = 0.0;
  for (Eigen::Index i = 0; i < states.cols(); ++i) {
    const double norm = states.col(i).norm();
    if (std::abs(norm - 1.0) > tol) {
      std::ostringstream os;
      os << "detection_error: state " << i << " has norm " << norm;
      throw DomainError(os.str());
    }
    hit += std::norm(M.matrix.col(i).dot(states.col(i)));
  }
  return 1.0 - hit / static_cast<double>(states.cols());
}

MeasurementMatrix lsm(const ComplexMatrix& states, double rank_tol) {
  return povm_from_frame(clsf(states, 1.0, rank_tol).frame, kDefaultTightTol, rank_tol);
}

std::vector<std::uint64_t> sample_outcomes(const MeasurementMatrix& M, const ComplexVector& phi,
                                           std::uint64_t trials, std::uint64_t seed, double tol) {
  if (trials < 1) throw DomainError("sample_outcomes: trials must be at least 1");
  const std::vector<double> p = probabilities(M, phi, tol);
  std::vector<double> cumulative(p.size());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) cumulative[i] = (total += p[i]);
  if (!(total > 0.0)) throw DomainError("sample_outcomes: all outcome probabilities are zero");

  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> counts(p.size(), 0);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
    std::size_t i = 0;
    while (i + 1 < cumulative.size() && !(u < cumulative[i])) ++i;
    ++counts[i];
  }
  return counts;
}

}  // namespace tightframe
