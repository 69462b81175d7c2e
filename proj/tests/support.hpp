// Shared fixtures for the test binaries: printed example matrices, random
// instance generators and small independent oracles.

#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tightframe/matcore.hpp"

namespace tightframe::testing {

inline const double kSqrt2 = std::sqrt(2.0);

// ------------------------------------------------------------ printed matrices

// Tight frame with four vectors in C^2, entries rounded to two decimals.
inline ComplexMatrix example1_frame_rounded() {
  ComplexMatrix F(2, 4);
  F << 0.35, 0.61, 0.5, 0.5,
      -0.61, 0.35, -0.5, 0.5;
  return F;
}

// The same frame with exact entries: the first two columns are
// (cos 60, -sin 60)/sqrt2 and (sin 60, cos 60)/sqrt2.
inline ComplexMatrix example1_frame_exact() {
  const double c = 0.5 / std::sqrt(2.0);
  const double s = std::sqrt(3.0) / 2.0 / std::sqrt(2.0);
  ComplexMatrix F(2, 4);
  F << c, s, 0.5, 0.5,
      -s, c, -0.5, 0.5;
  return F;
}

inline ComplexMatrix example1_extension_printed() {
  ComplexMatrix F(4, 4);
  F << 0.35, 0.61, 0.5, 0.5,
      -0.61, 0.35, -0.5, 0.5,
       0.35, 0.61, -0.5, -0.5,
      -0.61, 0.35, 0.5, -0.5;
  return F;
}

inline ComplexMatrix example2_frame() {
  ComplexMatrix F(3, 3);
  F << 1, -1, kSqrt2,
       1, 1, 0,
       1, 1, 0;
  return 0.5 * F;
}

inline ComplexMatrix example2_projector_printed() {
  ComplexMatrix P(3, 3);
  P << 1, 0, 0,
       0, 0.5, 0.5,
       0, 0.5, 0.5;
  return P;
}

inline ComplexMatrix example2_extension_printed() {
  ComplexMatrix F(3, 3);
  F << 0.5, -0.5, 0.7,
       0.85, 0.15, -0.5,
       0.15, 0.85, 0.5;
  return F;
}

inline ComplexVector example2_u3_printed() {
  ComplexVector u(3);
  u << 0.0, 0.7, -0.7;
  return u;
}

inline ComplexVector example2_v3_printed() {
  ComplexVector v(3);
  v << 0.5, -0.5, 0.7;
  return v;
}

// Geometrically uniform example over Z2 x Z2.
inline ComplexMatrix gu_U2() {
  return Eigen::Vector4cd(-1, 1, -1, -1).asDiagonal();
}
inline ComplexMatrix gu_U3() {
  return Eigen::Vector4cd(-1, -1, 1, -1).asDiagonal();
}
inline ComplexVector gu_phi() { return Eigen::Vector4cd(0.5, 0.5, 0.5, 0.5); }

inline ComplexMatrix gu_Phi_printed() {
  ComplexMatrix P(4, 4);
  P << 1, -1, -1, 1,
       1, 1, -1, -1,
       1, -1, 1, -1,
       1, -1, -1, 1;
  return 0.5 * P;
}

inline ComplexMatrix gu_gram_printed() {
  ComplexMatrix S(4, 4);
  S << 2, -1, -1, 0,
      -1, 2, 0, -1,
      -1, 0, 2, -1,
       0, -1, -1, 2;
  return 0.5 * S;
}

inline ComplexMatrix gu_hadamard_printed() {
  ComplexMatrix H(4, 4);
  H << 1, 1, 1, 1,
       1, -1, 1, -1,
       1, 1, -1, -1,
       1, -1, -1, 1;
  return 0.5 * H;
}

inline ComplexMatrix gu_canonical_printed() {
  ComplexMatrix F(4, 4);
  F << 1, -1, -1, 1,
       kSqrt2, kSqrt2, -kSqrt2, -kSqrt2,
       kSqrt2, -kSqrt2, kSqrt2, -kSqrt2,
       1, -1, -1, 1;
  return F / (2.0 * kSqrt2);
}

// ------------------------------------------------------------ random instances

class Random {
 public:
  explicit Random(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  ComplexMatrix gaussian(Eigen::Index rows, Eigen::Index cols) {
    ComplexMatrix A(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) A(i, j) = Complex(normal(), normal());
    return A;
  }

  ComplexVector gaussian_vector(Eigen::Index n) { return gaussian(n, 1).col(0); }

  // Haar-distributed unitary: QR of a Gaussian matrix with R's diagonal phases
  // moved into Q.
  ComplexMatrix haar_unitary(Eigen::Index n) {
    Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(n, n));
    ComplexMatrix Q = qr.householderQ();
    const ComplexMatrix R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex d = R(j, j);
      if (std::abs(d) > 0) Q.col(j) *= d / std::abs(d);
    }
    return Q;
  }

  // beta * U_r W_r^*: a tight frame of rank r with n columns in C^k.
  ComplexMatrix tight_frame(Eigen::Index k, Eigen::Index n, Eigen::Index r, double beta) {
    const ComplexMatrix U = haar_unitary(k).leftCols(r);
    const ComplexMatrix W = haar_unitary(n).leftCols(r);
    return beta * U * W.adjoint();
  }

  // Matrix of the given rank with controlled singular values.
  ComplexMatrix with_singular_values(Eigen::Index k, Eigen::Index n,
                                     const std::vector<double>& sigma) {
    const ComplexMatrix U = haar_unitary(k);
    const ComplexMatrix V = haar_unitary(n);
    ComplexMatrix D = ComplexMatrix::Zero(k, n);
    for (std::size_t i = 0; i < sigma.size(); ++i) D(i, i) = sigma[i];
    return U * D * V.adjoint();
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

// ------------------------------------------------------------ oracles

// Exact rational arithmetic for small integer-valued problems.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational(long long n = 0, long long d = 1) : num(n), den(d) { normalise(); }
  void normalise() {
    if (den < 0) { num = -num; den = -den; }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  friend Rational operator+(Rational a, Rational b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }
  friend Rational operator-(Rational a, Rational b) { return {a.num * b.den - b.num * a.den, a.den * b.den}; }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
  friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
};

using RationalMatrix = std::vector<std::vector<Rational>>;

// Characteristic polynomial det(lambda I - A) by Faddeev-LeVerrier, returned
// as coefficients of lambda^n, lambda^{n-1}, ..., lambda^0.
inline std::vector<Rational> characteristic_polynomial(const RationalMatrix& A) {
  const std::size_t n = A.size();
  auto mul = [n](const RationalMatrix& X, const RationalMatrix& Y) {
    RationalMatrix Z(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l) Z[i][j] = Z[i][j] + X[i][l] * Y[l][j];
    return Z;
  };
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  RationalMatrix M(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) M[i][i] = M[i][i] + c[k - 1];  // M_k = A M_{k-1} + c_{k-1} I
    const RationalMatrix AM = mul(A, M);
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace = trace + AM[i][i];
    c[k] = Rational(-1, static_cast<long long>(k)) * trace;
    M = AM;
  }
  return c;
}

// Plain evaluation of the group Fourier kernel via std::polar.
inline Complex dft_kernel(int h, int g, int n) {
  return std::polar(1.0, -2.0 * M_PI * h * g / n);
}

inline double max_abs(const ComplexMatrix& A) { return A.cwiseAbs().maxCoeff(); }

}  // namespace tightframe::testing
