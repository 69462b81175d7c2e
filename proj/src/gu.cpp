#include "tightframe/gu.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <sstream>

#include "tightframe/error.hpp"

namespace tightframe {

// ---------------------------------------------------------------- group model

AbelianGroup::AbelianGroup(std::vector<int> factors) : factors_(std::move(factors)) {
  long long order = 1;
  for (int f : factors_) {
    if (f < 2) throw DomainError("AbelianGroup: cyclic factor orders must be >= 2");
    order *= f;
    if (order > (1LL << 30)) throw DomainError("AbelianGroup: group order too large");
  }
  order_ = static_cast<int>(order);
}

std::vector<int> AbelianGroup::element(int index) const {
  if (index < 0 || index >= order_) throw DomainError("AbelianGroup: element index out of range");
  std::vector<int> g(factors_.size());
  for (std::size_t t = factors_.size(); t-- > 0;) {
    g[t] = index % factors_[t];
    index /= factors_[t];
  }
  return g;
}

int AbelianGroup::index_of(std::span<const int> element) const {
  if (element.size() != factors_.size()) throw DomainError("AbelianGroup: element has wrong arity");
  int index = 0;
  for (std::size_t t = 0; t < factors_.size(); ++t) {
    const int n = factors_[t];
    index = index * n + ((element[t] % n) + n) % n;
  }
  return index;
}

int AbelianGroup::add(int a, int b) const {
  auto ga = element(a);
  const auto gb = element(b);
  for (std::size_t t = 0; t < ga.size(); ++t) ga[t] += gb[t];
  return index_of(ga);
}

int AbelianGroup::subtract(int a, int b) const {
  auto ga = element(a);
  const auto gb = element(b);
  for (std::size_t t = 0; t < ga.size(); ++t) ga[t] -= gb[t];
  return index_of(ga);
}

GroupMap GroupMap::identity(int n) {
  GroupMap m;
  m.permutation.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) m.permutation[static_cast<std::size_t>(i)] = i;
  return m;
}

void GroupMap::validate(int n) const {
  if (static_cast<int>(permutation.size()) != n) {
    std::ostringstream os;
    os << "group map has " << permutation.size() << " entries, expected " << n;
    throw DomainError(os.str());
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int p : permutation) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) {
      throw DomainError("group map is not a bijection");
    }
    seen[static_cast<std::size_t>(p)] = true;
  }
}

// ---------------------------------------------------------------- Fourier

namespace {

// exp(-2 pi i m / n) with exact values on the quarter turns.
Complex fourier_kernel(long long m, long long n) {
  m %= n;
  if ((4 * m) % n == 0) {
    switch ((4 * m) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, 1.0};
    }
  }
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

ComplexMatrix ft_matrix(const AbelianGroup& G) {
  const int n = G.order();
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexMatrix F(n, n);
  for (int h = 0; h < n; ++h) {
    const auto hv = G.element(h);
    for (int g = 0; g < n; ++g) {
      const auto gv = G.element(g);
      Complex k(1.0, 0.0);
      for (std::size_t t = 0; t < hv.size(); ++t) {
        k *= fourier_kernel(static_cast<long long>(hv[t]) * gv[t], G.factors()[t]);
      }
      F(h, g) = norm * k;
    }
  }
  return F;
}

// ---------------------------------------------------------------- Gram structure

bool is_permuted_gram(const ComplexMatrix& S, double tol) {
  if (S.rows() != S.cols()) throw DomainError("is_permuted_gram: matrix is not square");
  const Eigen::Index n = S.cols();
  auto by_real = [](const Complex& a, const Complex& b) { return a.real() < b.real(); };

  std::vector<Complex> reference;
  reference.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) reference.push_back(S(0, j));
  std::sort(reference.begin(), reference.end(), by_real);

  std::vector<Complex> row(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n));
  for (Eigen::Index i = 1; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = S(i, j);
    std::sort(row.begin(), row.end(), by_real);
    std::fill(used.begin(), used.end(), false);
    for (const Complex& want : reference) {
      // candidates with real part within tol, found by binary search
      auto lo = std::lower_bound(row.begin(), row.end(), Complex(want.real() - tol, 0.0), by_real);
      bool matched = false;
      for (auto it = lo; it != row.end() && it->real() <= want.real() + tol; ++it) {
        const auto idx = static_cast<std::size_t>(it - row.begin());
        if (!used[idx] && std::abs(*it - want) <= tol) {
          used[idx] = true;
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- GU generation

namespace {

bool same_matrix(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
  return (a - b).cwiseAbs().maxCoeff() <= tol;
}

struct FiniteGroup {
  std::vector<ComplexMatrix> elements;  // elements[0] is the identity
  std::vector<std::vector<int>> table;  // table[a][b] = index of elements[a] * elements[b]
  std::vector<int> generator_index;     // closure index of each supplied generator

  std::optional<int> find(const ComplexMatrix& m, double tol) const {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (same_matrix(elements[i], m, tol)) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  int order_of(int a) const {
    int k = 1;
    for (int x = a; x != 0; x = table[static_cast<std::size_t>(x)][static_cast<std::size_t>(a)]) {
      ++k;
    }
    return k;
  }
};

FiniteGroup close_group(std::span<const ComplexMatrix> generators, const GuOptions& opts) {
  const Eigen::Index dim = generators.front().rows();
  FiniteGroup grp;
  grp.elements.push_back(ComplexMatrix::Identity(dim, dim));
  for (const auto& g : generators) {
    if (auto idx = grp.find(g, opts.tol)) {
      grp.generator_index.push_back(*idx);
    } else {
      grp.generator_index.push_back(static_cast<int>(grp.elements.size()));
      grp.elements.push_back(g);
    }
  }
  // breadth-first closure under right multiplication by generators
  for (std::size_t head = 0; head < grp.elements.size(); ++head) {
    for (const auto& g : generators) {
      ComplexMatrix prod = grp.elements[head] * g;
      if (grp.find(prod, opts.tol)) continue;
      if (grp.elements.size() >= opts.max_group_order) {
        std::ostringstream os;
        os << "generate_gu_set: group closure exceeds " << opts.max_group_order << " elements";
        throw DomainError(os.str());
      }
      grp.elements.push_back(std::move(prod));
    }
  }
  const std::size_t n = grp.elements.size();
  grp.table.assign(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto idx = grp.find(grp.elements[a] * grp.elements[b], opts.tol);
      if (!idx) throw NumericalError("generate_gu_set: group closure is not closed");
      grp.table[a][b] = *idx;
    }
  }
  return grp;
}

// Finds b_1..b_p such that (e_1..e_p) -> prod b_t^{e_t} is a bijection from
// Z_{m_1} x ... x Z_{m_p}. Candidates are tried generators-first.
std::vector<int> cyclic_basis(const FiniteGroup& grp) {
  const int n = static_cast<int>(grp.elements.size());
  std::vector<int> candidates;
  for (int g : grp.generator_index) {
    if (g != 0 && std::find(candidates.begin(), candidates.end(), g) == candidates.end()) {
      candidates.push_back(g);
    }
  }
  for (int g = 1; g < n; ++g) {
    if (std::find(candidates.begin(), candidates.end(), g) == candidates.end()) {
      candidates.push_back(g);
    }
  }

  std::vector<int> basis;
  std::function<bool(const std::vector<bool>&, int)> search = [&](const std::vector<bool>& member,
                                                                  int size) -> bool {
    if (size == n) return true;
    for (int c : candidates) {
      if (member[static_cast<std::size_t>(c)]) continue;
      // <c> must meet the current subgroup only in the identity
      std::vector<int> powers;
      bool independent = true;
      for (int x = c; x != 0; x = grp.table[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)]) {
        if (member[static_cast<std::size_t>(x)]) {
          independent = false;
          break;
        }
        powers.push_back(x);
      }
      if (!independent) continue;
      std::vector<bool> next = member;
      int next_size = size;
      for (int h = 0; h < n; ++h) {
        if (!member[static_cast<std::size_t>(h)]) continue;
        for (int x : powers) {
          const int prod = grp.table[static_cast<std::size_t>(h)][static_cast<std::size_t>(x)];
          if (!next[static_cast<std::size_t>(prod)]) {
            next[static_cast<std::size_t>(prod)] = true;
            ++next_size;
          }
        }
      }
      basis.push_back(c);
      if (search(next, next_size)) return true;
      basis.pop_back();
    }
    return false;
  };

  std::vector<bool> trivial(static_cast<std::size_t>(n), false);
  trivial[0] = true;
  if (!search(trivial, 1)) {
    throw NumericalError("generate_gu_set: no cyclic decomposition found");
  }
  return basis;
}

}  // namespace

GuSet generate_gu_set(std::span<const ComplexMatrix> generators, const ComplexVector& phi,
                      const GuOptions& opts) {
  if (generators.empty()) throw DomainError("generate_gu_set: at least one generator required");
  const Eigen::Index dim = generators.front().rows();
  if (phi.size() != dim) throw DomainError("generate_gu_set: vector dimension mismatch");
  if (!phi.allFinite()) throw DomainError("generate_gu_set: vector has non-finite entries");
  const ComplexMatrix I = ComplexMatrix::Identity(dim, dim);
  for (const auto& g : generators) {
    require_finite(g, "generate_gu_set");
    if (g.rows() != dim || g.cols() != dim) {
      throw DomainError("generate_gu_set: generators must be square and of equal size");
    }
    if ((g.adjoint() * g - I).norm() > opts.tol * dim) {
      throw DomainError("generate_gu_set: generator is not unitary");
    }
  }
  for (std::size_t a = 0; a < generators.size(); ++a) {
    for (std::size_t b = a + 1; b < generators.size(); ++b) {
      const ComplexMatrix comm = generators[a] * generators[b] - generators[b] * generators[a];
      if (comm.cwiseAbs().maxCoeff() > opts.tol) {
        throw DomainError("generate_gu_set: generators do not commute; group is not abelian");
      }
    }
  }

  const FiniteGroup grp = close_group(generators, opts);
  const std::vector<int> basis = cyclic_basis(grp);

  std::vector<int> factors;
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) factors.push_back(grp.order_of(*it));

  GuSet out;
  out.group = AbelianGroup(factors);
  const int n = out.group.order();
  out.map = GroupMap::identity(n);
  out.Phi.resize(dim, n);
  out.elements.reserve(static_cast<std::size_t>(n));
  for (int idx = 0; idx < n; ++idx) {
    const auto coords = out.group.element(idx);
    ComplexMatrix U = I;
    // coordinate t belongs to basis element p-1-t
    for (std::size_t t = 0; t < coords.size(); ++t) {
      const auto& b = grp.elements[static_cast<std::size_t>(basis[basis.size() - 1 - t])];
      for (int e = 0; e < coords[t]; ++e) U = U * b;
    }
    out.Phi.col(idx) = U * phi;
    out.elements.push_back(std::move(U));
  }
  return out;
}

// ---------------------------------------------------------------- GU canonical frame

namespace {

ComplexMatrix to_group_order(const ComplexMatrix& Phi, const GroupMap& map) {
  ComplexMatrix ordered(Phi.rows(), Phi.cols());
  for (Eigen::Index i = 0; i < Phi.cols(); ++i) {
    ordered.col(map.permutation[static_cast<std::size_t>(i)]) = Phi.col(i);
  }
  return ordered;
}

void check_inputs(const ComplexMatrix& Phi, const AbelianGroup& G, const GroupMap& map) {
  require_finite(Phi, "gu_canonical");
  if (Phi.cols() != G.order()) {
    std::ostringstream os;
    os << "gu_canonical: " << Phi.cols() << " vectors but group order " << G.order();
    throw DomainError(os.str());
  }
  map.validate(G.order());
}

}  // namespace

GuSpectrum gu_spectrum(const ComplexMatrix& Phi, const AbelianGroup& G, const GroupMap& map,
                       double tol) {
  check_inputs(Phi, G, map);
  const int n = G.order();
  const ComplexMatrix ordered = to_group_order(Phi, map);
  const ComplexMatrix S = ordered.adjoint() * ordered;
  const double scale = std::max(1.0, S.cwiseAbs().maxCoeff());

  if (!is_permuted_gram(S, tol * scale)) {
    throw DomainError("gu_canonical: Gram matrix is not a permuted matrix; vectors are not GU");
  }
  GuSpectrum out;
  out.inner_products = S.row(0).transpose();
  // the Gram matrix must be group-circulant: <phi(a), phi(b)> = s(b - a)
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (std::abs(S(a, b) - out.inner_products(G.subtract(b, a))) > tol * scale) {
        throw DomainError(
            "gu_canonical: vectors are not geometrically uniform under the given group and map");
      }
    }
  }

  const ComplexVector s_hat = ft_matrix(G) * out.inner_products;
  out.s_hat.resize(n);
  out.sigma.resize(n);
  const double root_n = std::sqrt(static_cast<double>(n));
  for (int h = 0; h < n; ++h) {
    double v = s_hat(h).real();
    if (std::abs(s_hat(h).imag()) > tol * scale * root_n || v < -1e-10 * scale * root_n) {
      throw DomainError(
          "gu_canonical: inner-product sequence not positive semidefinite under FT");
    }
    v = std::max(v, 0.0);
    out.s_hat(h) = v;
    out.sigma(h) = std::pow(static_cast<double>(n), 0.25) * std::sqrt(v);
  }
  return out;
}

ComplexMatrix gu_canonical(const ComplexMatrix& Phi, const AbelianGroup& G, const GroupMap& map,
                           double tol) {
  const GuSpectrum spec = gu_spectrum(Phi, G, map, tol);
  const int n = G.order();
  const ComplexMatrix ordered = to_group_order(Phi, map);
  const ComplexMatrix FT = ft_matrix(G);

  // column h of Phi_hat is sum_g phi(g) <h, g> / sqrt(n)
  const ComplexMatrix Phi_hat = ordered * FT.transpose();
  // sigma carries square-root noise from s_hat, so the numerical rank is taken
  // from the SVD route and only the `rank` largest sigma(h) are inverted
  const SvdResult ref_svd = svd(ordered);
  std::vector<int> by_size(static_cast<std::size_t>(n));
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](int a, int b) { return spec.sigma(a) > spec.sigma(b); });
  ComplexMatrix u = ComplexMatrix::Zero(Phi.rows(), n);
  for (int i = 0; i < ref_svd.rank; ++i) {
    const int h = by_size[static_cast<std::size_t>(i)];
    u.col(h) = Phi_hat.col(h) / spec.sigma(h);
  }
  const ComplexMatrix frame_ordered = u * FT.adjoint();

  const ComplexMatrix reference = partial_isometry(ref_svd, ref_svd.rank);
  const double condition = ref_svd.rank == 0 ? 1.0
                                             : ref_svd.singular_values(0) /
                                                   ref_svd.singular_values(ref_svd.rank - 1);
  const double err = (frame_ordered - reference).cwiseAbs().maxCoeff();
  if (err > tol * std::max(1.0, condition)) {
    std::ostringstream os;
    os << "gu_canonical: Fourier route deviates from SVD route by " << err;
    throw NumericalError(os.str());
  }

  ComplexMatrix frame(Phi.rows(), Phi.cols());
  for (Eigen::Index i = 0; i < Phi.cols(); ++i) {
    frame.col(i) = frame_ordered.col(map.permutation[static_cast<std::size_t>(i)]);
  }
  return frame;
}

double gu_symmetry_error(const ComplexMatrix& frame, std::span<const ComplexMatrix> elements) {
  if (static_cast<Eigen::Index>(elements.size()) != frame.cols()) {
    throw DomainError("gu_symmetry_error: one group element per column required");
  }
  const ComplexVector base = elements[0].adjoint() * frame.col(0);
  double worst = 0.0;
  for (Eigen::Index i = 0; i < frame.cols(); ++i) {
    worst = std::max(worst, (frame.col(i) - elements[static_cast<std::size_t>(i)] * base).norm());
  }
  return worst;
}

}  // namespace tightframe
