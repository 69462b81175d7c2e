#include <doctest.h>

#include <numeric>

#include "support.hpp"
#include "tightframe/error.hpp"
#include "tightframe/lsf.hpp"
#include "tightframe/quantum.hpp"

using namespace tightframe;
using namespace tightframe::testing;

TEST_CASE("povm_from_frame") {
  const MeasurementMatrix M1 = povm_from_frame(example1_frame_exact());
  CHECK(max_abs(M1.matrix - example1_frame_exact()) < 1e-12);
  CHECK(max_abs(M1.subspace_projector - ComplexMatrix::Identity(2, 2)) < 1e-12);

  const MeasurementMatrix M2 = povm_from_frame(2.0 * ComplexMatrix::Identity(2, 2));
  CHECK(max_abs(M2.matrix - ComplexMatrix::Identity(2, 2)) < 1e-15);

  // the canonical GU frame resolves the rank-3 projector of the GU span
  const MeasurementMatrix M3 = povm_from_frame(gu_canonical_printed());
  const SvdResult s = svd(gu_Phi_printed());
  const ComplexMatrix P3 = s.U.leftCols(3) * s.U.leftCols(3).adjoint();
  CHECK(max_abs(M3.matrix * M3.matrix.adjoint() - P3) < 1e-12);
  CHECK(max_abs(M3.subspace_projector - P3) < 1e-12);

  CHECK_THROWS_AS(povm_from_frame(gu_Phi_printed()), DomainError);
}

TEST_CASE("probabilities") {
  SUBCASE("standard basis") {
    const MeasurementMatrix M{ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)};
    const auto p = probabilities(M, Eigen::Vector2cd(1.0, 0.0));
    CHECK(p == std::vector<double>{1.0, 0.0});
  }
  SUBCASE("printed example 1 matrix") {
    const MeasurementMatrix M{example1_frame_rounded(), ComplexMatrix::Identity(2, 2)};
    const auto p = probabilities(M, Eigen::Vector2cd(1.0, 0.0));
    CHECK(p[0] == doctest::Approx(0.1225).epsilon(1e-12));
    CHECK(p[1] == doctest::Approx(0.3721).epsilon(1e-12));
    CHECK(p[2] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(p[3] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(0.9946).epsilon(1e-12));

    const auto exact = probabilities(povm_from_frame(example1_frame_exact()), Eigen::Vector2cd(1.0, 0.0));
    CHECK(std::accumulate(exact.begin(), exact.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("state equal to a basis vector") {
    Random rng(12);
    const ComplexMatrix Q = rng.haar_unitary(4);
    const MeasurementMatrix M{Q, ComplexMatrix::Identity(4, 4)};
    const auto p = probabilities(M, Q.col(0));
    CHECK(p[0] == doctest::Approx(1.0));
    for (std::size_t i = 1; i < 4; ++i) CHECK(p[i] < 1e-28);
  }
  SUBCASE("errors") {
    const MeasurementMatrix M = povm_from_frame(gu_canonical_printed());
    CHECK_THROWS_WITH_AS(probabilities(M, Eigen::Vector4cd(1.0, 0.0, 0.0, 0.0)),
                         doctest::Contains("outside"), DomainError);
    CHECK_THROWS_WITH_AS(probabilities(M, Eigen::Vector4cd(1.0, 1.0, 1.0, 1.0)),
                         doctest::Contains("norm"), DomainError);
    CHECK_THROWS_AS(probabilities(M, Eigen::Vector2cd(1.0, 0.0)), DomainError);
  }
}

TEST_CASE("probabilities sum to one") {
  Random rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = rng.integer(1, 8), n = rng.integer(1, 8);
    const int r = rng.integer(1, std::min(k, n));
    const MeasurementMatrix M = povm_from_frame(rng.tight_frame(k, n, r, rng.uniform(0.5, 2.0)));
    ComplexVector phi = M.subspace_projector * rng.gaussian_vector(k);
    phi /= phi.norm();
    const auto p = probabilities(M, phi);
    CHECK(std::abs(std::accumulate(p.begin(), p.end(), 0.0) - 1.0) <= 1e-10);
  }
}

TEST_CASE("detection_error") {
  SUBCASE("orthonormal states measured by themselves") {
    Random rng(14);
    const ComplexMatrix Q = rng.haar_unitary(5).leftCols(3);
    const MeasurementMatrix M = povm_from_frame(Q);
    CHECK(std::abs(detection_error(M, Q)) < 1e-14);
  }
  SUBCASE("GU states with their LSM") {
    const MeasurementMatrix M = lsm(gu_Phi_printed());
    const double hit = (1.0 + kSqrt2) / (2.0 * kSqrt2);
    CHECK(1.0 - hit * hit == doctest::Approx(0.271446609406726).epsilon(1e-14));
    CHECK(detection_error(M, gu_Phi_printed()) == doctest::Approx(1.0 - hit * hit).epsilon(1e-12));
  }
  SUBCASE("single state") {
    const ComplexVector phi = Eigen::Vector2cd(0.6, Complex(0.0, 0.8));
    const MeasurementMatrix M = povm_from_frame(ComplexMatrix(phi));
    CHECK(std::abs(detection_error(M, ComplexMatrix(phi))) < 1e-15);
  }
  SUBCASE("errors") {
    const MeasurementMatrix M = povm_from_frame(ComplexMatrix::Identity(2, 2));
    CHECK_THROWS_AS(detection_error(M, ComplexMatrix::Identity(2, 1)), DomainError);
    CHECK_THROWS_AS(detection_error(M, 2.0 * ComplexMatrix::Identity(2, 2)), DomainError);
  }
}

TEST_CASE("lsm") {
  Random rng(15);
  const ComplexMatrix Q = rng.haar_unitary(4).leftCols(2);
  CHECK(max_abs(lsm(Q).matrix - Q) < 1e-12);
  CHECK(max_abs(lsm(gu_Phi_printed()).matrix - gu_canonical_printed()) < 1e-12);

  const ComplexVector phi = Eigen::Vector2cd(1.0, 1.0) / kSqrt2;
  ComplexMatrix dup(2, 2);
  dup << phi, phi;
  const MeasurementMatrix M = lsm(dup);
  CHECK(max_abs(M.matrix.col(0) - phi / kSqrt2) < 1e-12);
  CHECK(max_abs(M.matrix.col(1) - phi / kSqrt2) < 1e-12);
  CHECK_THROWS_AS(lsm(ComplexMatrix::Zero(2, 2)), DomainError);
}

TEST_CASE("sample_outcomes") {
  const MeasurementMatrix I2{ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)};
  CHECK(sample_outcomes(I2, Eigen::Vector2cd(1.0, 0.0), 1000, 1) == std::vector<std::uint64_t>{1000, 0});

  const auto one = sample_outcomes(povm_from_frame(example1_frame_exact()), Eigen::Vector2cd(1.0, 0.0), 1, 7);
  CHECK(std::accumulate(one.begin(), one.end(), std::uint64_t{0}) == 1);
  CHECK(std::count(one.begin(), one.end(), std::uint64_t{1}) == 1);

  SUBCASE("frequencies within three standard errors") {
    const MeasurementMatrix M = povm_from_frame(example1_frame_exact());
    const ComplexVector phi = Eigen::Vector2cd(1.0, 0.0);
    const auto p = probabilities(M, phi);
    const std::uint64_t trials = 100000;
    const auto counts = sample_outcomes(M, phi, trials, 2024);
    for (std::size_t i = 0; i < p.size(); ++i) {
      const double freq = static_cast<double>(counts[i]) / trials;
      CHECK(std::abs(freq - p[i]) <= 3.0 * std::sqrt(p[i] * (1.0 - p[i]) / trials));
    }
  }
  SUBCASE("reproducible for a seed") {
    const MeasurementMatrix M = povm_from_frame(gu_canonical_printed());
    const ComplexVector phi = gu_Phi_printed().col(0);
    CHECK(sample_outcomes(M, phi, 500, 42) == sample_outcomes(M, phi, 500, 42));
    CHECK(sample_outcomes(M, phi, 500, 42) != sample_outcomes(M, phi, 500, 43));
  }
  CHECK_THROWS_AS(sample_outcomes(I2, Eigen::Vector2cd(1.0, 0.0), 0, 1), DomainError);
}
