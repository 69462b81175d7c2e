// gu.hpp — geometrically uniform vector sets {U_g phi : g in G} for a finite
// abelian group of unitaries, the Fourier transform over
// G = Z_{n_1} x ... x Z_{n_p}, and the closed-form canonical frame that
// diagonalises the group-circulant Gram matrix.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tightframe/matcore.hpp"

namespace tightframe {

// Z_{n_1} x ... x Z_{n_p}. Elements are numbered lexicographically with the
// last coordinate varying fastest; index 0 is the identity. An empty factor
// list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int order() const { return order_; }

  std::vector<int> element(int index) const;
  int index_of(std::span<const int> element) const;
  int add(int a, int b) const;
  int subtract(int a, int b) const;

 private:
  std::vector<int> factors_;
  int order_ = 1;
};

// permutation[i] is the group element index carried by column i.
struct GroupMap {
  std::vector<int> permutation;

  static GroupMap identity(int n);
  // Throws DomainError unless permutation is a bijection on {0..n-1}.
  void validate(int n) const;
};

struct GuSet {
  ComplexMatrix Phi;                    // column i is elements[i] * phi
  AbelianGroup group;
  GroupMap map;
  std::vector<ComplexMatrix> elements;  // unitary carried by each column
};

struct GuOptions {
  std::size_t max_group_order = 4096;
  double tol = 1e-9;
};

// n x n matrix with entries n^{-1/2} prod_t exp(-2 pi i h_t g_t / n_t), rows h,
// columns g. Quarter-turn phases are produced exactly.
ComplexMatrix ft_matrix(const AbelianGroup& G);

// True iff S is square and every row is a permutation of the first row within tol.
bool is_permuted_gram(const ComplexMatrix& S, double tol);

// Closes the generators under multiplication, checks they are unitary and
// commute, and finds a cyclic decomposition of the group. The supplied
// generators are preferred as cyclic basis elements; the first generator
// becomes the last (fastest) coordinate.
GuSet generate_gu_set(std::span<const ComplexMatrix> generators, const ComplexVector& phi,
                      const GuOptions& opts = {});

// Fourier data of a GU set: s(g) = <phi(0), phi(g)>, s_hat = FT(s),
// sigma(h) = n^{1/4} sqrt(s_hat(h)) are the singular values of Phi.
struct GuSpectrum {
  ComplexVector inner_products;
  RealVector s_hat;
  RealVector sigma;
};

GuSpectrum gu_spectrum(const ComplexMatrix& Phi, const AbelianGroup& G, const GroupMap& map,
                       double tol = 1e-9);

// Canonical (least-squares normalised tight) frame of a GU set computed via the
// group Fourier transform: F = Phi FT Sigma^dagger FT^*. Returned columns follow
// the input column order. Cross-checked against the SVD route.
ComplexMatrix gu_canonical(const ComplexMatrix& Phi, const AbelianGroup& G, const GroupMap& map,
                           double tol = 1e-9);

// max_i |psi_i - U_i psi_0| for frame columns psi_i and per-column unitaries
// U_i (elements[0] must be the identity).
double gu_symmetry_error(const ComplexMatrix& frame, std::span<const ComplexMatrix> elements);

}  // namespace tightframe
