#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polymap.hpp"
#include "scalar.hpp"

namespace polyaut {

/// Character of the n-torus: the Laurent monomial t |-> t^coords.
struct Character {
  std::vector<int> coords;

  Character() = default;
  explicit Character(std::vector<int> c) : coords(std::move(c)) {}

  int n() const { return static_cast<int>(coords.size()); }

  bool operator==(const Character& rhs) const { return coords == rhs.coords; }
  bool operator!=(const Character& rhs) const { return !(*this == rhs); }
  bool operator<(const Character& rhs) const { return coords < rhs.coords; }
};

/// Point of the diagonal torus: n nonzero scalars.
class DiagonalElement {
 public:
  explicit DiagonalElement(std::vector<GaussianRational> entries)
      : entries_(std::move(entries)) {
    if (entries_.empty()) throw std::invalid_argument("diagonal element needs entries");
    for (const auto& t : entries_)
      if (t.is_zero()) throw std::invalid_argument("diagonal element has a zero entry");
  }

  int n() const { return static_cast<int>(entries_.size()); }
  const std::vector<GaussianRational>& entries() const { return entries_; }
  const GaussianRational& entry(int j) const { return entries_.at(static_cast<std::size_t>(j)); }

  PolyMap<GaussianRational> to_map() const {
    return PolyMap<GaussianRational>::diagonal(entries_);
  }

  DiagonalElement inverse() const {
    std::vector<GaussianRational> inv;
    inv.reserve(entries_.size());
    for (const auto& t : entries_) inv.push_back(GaussianRational(1) / t);
    return DiagonalElement(std::move(inv));
  }

  friend DiagonalElement operator*(const DiagonalElement& a, const DiagonalElement& b) {
    if (a.n() != b.n()) throw std::invalid_argument("size mismatch");
    std::vector<GaussianRational> prod;
    prod.reserve(a.entries_.size());
    for (std::size_t j = 0; j < a.entries_.size(); ++j)
      prod.push_back(a.entries_[j] * b.entries_[j]);
    return DiagonalElement(std::move(prod));
  }

 private:
  std::vector<GaussianRational> entries_;
};

/// lambda(d) = prod_j d_j^(lambda_j), with negative exponents as division.
inline GaussianRational eval_character(const Character& lambda, const DiagonalElement& d) {
  if (lambda.n() != d.n()) throw std::invalid_argument("size mismatch");
  GaussianRational acc(1);
  for (int j = 0; j < d.n(); ++j)
    acc *= pow(d.entry(j), lambda.coords[static_cast<std::size_t>(j)]);
  return acc;
}

/// Membership in the set of characters carried by diagonally-normalized
/// unipotent one-parameter subgroups: some coordinate equals 1 and every
/// other coordinate is <= 0.
inline bool is_in_Xu(const Character& lambda) {
  bool has_one = false;
  for (int v : lambda.coords) {
    if (v == 1) {
      if (has_one) return false;
      has_one = true;
    } else if (v > 0) {
      return false;
    }
  }
  return has_one;
}

/// All members with every coordinate >= -bound, grouped by the axis carrying
/// the 1 and listed lex-descending inside each group.
inline std::vector<Character> enumerate_Xu(int n, int bound) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (bound < 0) throw std::invalid_argument("need bound >= 0");
  std::vector<Character> out;
  std::vector<int> coords(static_cast<std::size_t>(n), 0);
  for (int axis = 0; axis < n; ++axis) {
    // Odometer over the non-axis coordinates, each ranging over [-bound, 0],
    // visited in lex-descending order of the full vector.
    std::vector<std::size_t> rest;
    for (int j = 0; j < n; ++j)
      if (j != axis) rest.push_back(static_cast<std::size_t>(j));
    std::fill(coords.begin(), coords.end(), 0);
    coords[static_cast<std::size_t>(axis)] = 1;
    while (true) {
      out.emplace_back(coords);
      std::size_t k = rest.size();
      while (k > 0 && coords[rest[k - 1]] == -bound) {
        coords[rest[k - 1]] = 0;
        --k;
      }
      if (k == 0) break;
      coords[rest[k - 1]] -= 1;
    }
  }
  return out;
}

inline bool is_dominant(const Character& lambda) {
  for (std::size_t j = 1; j < lambda.coords.size(); ++j)
    if (lambda.coords[j - 1] < lambda.coords[j]) return false;
  return true;
}

/// Dominance order on weights: lo is dominated by hi when both sums agree
/// and every prefix sum of hi is at least the matching prefix sum of lo.
inline bool dominance_leq(const Character& lo, const Character& hi) {
  if (lo.n() != hi.n()) throw std::invalid_argument("size mismatch");
  int sum_lo = 0;
  int sum_hi = 0;
  for (int j = 0; j < lo.n(); ++j) {
    sum_lo += lo.coords[static_cast<std::size_t>(j)];
    sum_hi += hi.coords[static_cast<std::size_t>(j)];
    if (sum_hi < sum_lo) return false;
  }
  return sum_lo == sum_hi;
}

/// For a dominant lambda in X_u other than the first coordinate character:
/// a dominant character strictly dominated by lambda that lies outside X_u.
/// The witness flattens the first negative entry toward zero and clears the
/// positive slack before it.
inline Character translation_lemma_witness(const Character& lambda) {
  if (!is_in_Xu(lambda)) throw std::invalid_argument("character is not in X_u");
  if (!is_dominant(lambda)) throw std::invalid_argument("character is not dominant");
  std::size_t n = lambda.coords.size();
  std::size_t k = 0;
  while (k < n && lambda.coords[k] >= 0) ++k;
  if (k == n)
    throw std::invalid_argument("first coordinate character has no dominated witness");
  std::vector<int> w(n, 0);
  w[k] = lambda.coords[k] + 1;
  for (std::size_t j = k + 1; j < n; ++j) w[j] = lambda.coords[j];
  return Character(std::move(w));
}

/// Finite diagonal subgroup mu <= D_n described at exponent level: elements
/// are exponent vectors mod k, acting by x_j |-> zeta^(a_j) x_j for a
/// primitive k-th root of unity zeta.
struct FiniteDiagonalGroup {
  int n = 1;
  int k = 1;
  std::vector<std::vector<int>> generators;

  /// The full group of k-torsion diagonal elements, mu_k^n.
  static FiniteDiagonalGroup full_rank(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
    FiniteDiagonalGroup g;
    g.n = n;
    g.k = k;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      g.generators.push_back(std::move(e));
    }
    return g;
  }
};

/// Every element of the group generated by the generator vectors mod k,
/// sorted lexicographically. Throws when the group would exceed the budget.
inline std::vector<std::vector<int>> mu_elements(const FiniteDiagonalGroup& g,
                                                 std::size_t budget = std::size_t(1) << 20) {
  for (const auto& a : g.generators)
    if (static_cast<int>(a.size()) != g.n) throw std::invalid_argument("generator size mismatch");
  std::set<std::vector<int>> seen;
  seen.insert(std::vector<int>(static_cast<std::size_t>(g.n), 0));
  std::vector<std::vector<int>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& e : frontier) {
      for (const auto& a : g.generators) {
        std::vector<int> s(e);
        for (std::size_t j = 0; j < s.size(); ++j) s[j] = (s[j] + a[j]) % g.k;
        if (seen.insert(s).second) {
          if (seen.size() > budget) throw std::length_error("group enumeration budget exceeded");
          next.push_back(std::move(s));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<std::vector<int>>(seen.begin(), seen.end());
}

/// zeta_k^e for the k where a primitive k-th root of unity exists in Q(i):
/// k in {1, 2, 4}. Larger k are handled at exponent level elsewhere.
inline GaussianRational root_of_unity_pow(int k, int e) {
  if (k == 1) return GaussianRational(1);
  int r = ((e % k) + k) % k;
  if (k == 2) return r == 0 ? GaussianRational(1) : GaussianRational(-1);
  if (k == 4) {
    switch (r) {
      case 0: return GaussianRational(1);
      case 1: return GaussianRational::i();
      case 2: return GaussianRational(-1);
      default: return -GaussianRational::i();
    }
  }
  throw std::domain_error("no primitive root of unity of this order in Q(i)");
}

/// The diagonal map realizing an exponent vector of mu_k, for k in {1,2,4}.
inline PolyMap<GaussianRational> mu_element_map(const FiniteDiagonalGroup& g,
                                                const std::vector<int>& expo) {
  std::vector<GaussianRational> scale;
  scale.reserve(expo.size());
  for (int e : expo) scale.push_back(root_of_unity_pow(g.k, e));
  return PolyMap<GaussianRational>::diagonal(scale);
}

}  // namespace polyaut
