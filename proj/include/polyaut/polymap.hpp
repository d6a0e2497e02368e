#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"

namespace polyaut {

/// Polynomial endomorphism of affine n-space: n polynomials in n variables.
template <ring_scalar K>
class PolyMap {
 public:
  explicit PolyMap(std::vector<Polynomial<K>> components)
      : comps_(std::move(components)) {
    if (comps_.empty()) throw std::invalid_argument("map needs at least one component");
    int n = static_cast<int>(comps_.size());
    for (const auto& p : comps_)
      if (p.nvars() != n)
        throw std::invalid_argument("variable-count mismatch between components");
  }

  static PolyMap identity(int n) {
    std::vector<Polynomial<K>> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) comps.push_back(Polynomial<K>::variable(n, i));
    return PolyMap(std::move(comps));
  }

  /// x |-> x + shift.
  static PolyMap translation(std::vector<K> shift) {
    int n = static_cast<int>(shift.size());
    std::vector<Polynomial<K>> comps;
    comps.reserve(shift.size());
    for (int i = 0; i < n; ++i) {
      auto p = Polynomial<K>::variable(n, i);
      p += Polynomial<K>::constant(n, shift[static_cast<std::size_t>(i)]);
      comps.push_back(std::move(p));
    }
    return PolyMap(std::move(comps));
  }

  /// x |-> (t_1 x_1, ..., t_n x_n).
  static PolyMap diagonal(const std::vector<K>& scale) {
    int n = static_cast<int>(scale.size());
    std::vector<Polynomial<K>> comps;
    comps.reserve(scale.size());
    for (int i = 0; i < n; ++i)
      comps.push_back(Polynomial<K>::variable(n, i) * scale[static_cast<std::size_t>(i)]);
    return PolyMap(std::move(comps));
  }

  /// x |-> A x + b.
  static PolyMap affine(const Matrix<K>& a, const std::vector<K>& b)
      requires field_scalar<K> {
    int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("matrix/shift size mismatch");
    std::vector<Polynomial<K>> comps;
    comps.reserve(a.size());
    for (int i = 0; i < n; ++i) {
      const auto& row = a[static_cast<std::size_t>(i)];
      if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
      Polynomial<K> p = Polynomial<K>::constant(n, b[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n; ++j)
        p += Polynomial<K>::variable(n, j) * row[static_cast<std::size_t>(j)];
      comps.push_back(std::move(p));
    }
    return PolyMap(std::move(comps));
  }

  int nvars() const { return static_cast<int>(comps_.size()); }
  const std::vector<Polynomial<K>>& components() const { return comps_; }
  const Polynomial<K>& component(int i) const { return comps_.at(static_cast<std::size_t>(i)); }

  bool is_identity() const { return *this == identity(nvars()); }

  bool operator==(const PolyMap& rhs) const { return comps_ == rhs.comps_; }
  bool operator!=(const PolyMap& rhs) const { return !(*this == rhs); }

 private:
  std::vector<Polynomial<K>> comps_;
};

/// f after g: component i is f_i(g_1, ..., g_n). Optional truncation drops
/// all terms of total degree > max_degree along the way.
template <ring_scalar K>
PolyMap<K> compose(const PolyMap<K>& f, const PolyMap<K>& g,
                   int max_degree = std::numeric_limits<int>::max()) {
  if (f.nvars() != g.nvars()) throw std::invalid_argument("variable-count mismatch");
  std::vector<Polynomial<K>> comps;
  comps.reserve(static_cast<std::size_t>(f.nvars()));
  for (const auto& p : f.components()) comps.push_back(substitute(p, g.components(), max_degree));
  return PolyMap<K>(std::move(comps));
}

/// Max component degree. The identity has degree 1; a constant map reports
/// its honest component degrees (0, or the zero sentinel when all zero).
template <ring_scalar K>
int map_degree(const PolyMap<K>& f) {
  int d = degree_of_zero;
  for (const auto& p : f.components()) d = std::max(d, p.degree());
  return d;
}

template <ring_scalar K>
std::vector<std::vector<Polynomial<K>>> jacobian_matrix(const PolyMap<K>& f) {
  int n = f.nvars();
  std::vector<std::vector<Polynomial<K>>> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Polynomial<K>> row;
    row.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) row.push_back(f.component(i).partial(j));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace detail {

template <ring_scalar K>
Polynomial<K> poly_det(const std::vector<std::vector<Polynomial<K>>>& m, std::vector<int> cols,
                       int row) {
  int n = static_cast<int>(m.size());
  if (row == n) return Polynomial<K>::constant(m.empty() ? 1 : m[0][0].nvars(), K(1));
  Polynomial<K> acc(m[0][0].nvars());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    int col = cols[k];
    const Polynomial<K>& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    if (entry.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != k) rest.push_back(cols[j]);
    Polynomial<K> minor = entry * poly_det(m, std::move(rest), row + 1);
    if (k % 2 == 0)
      acc += minor;
    else
      acc -= minor;
  }
  return acc;
}

}  // namespace detail

/// Exact determinant of the Jacobian matrix. A non-constant or zero result
/// refutes invertibility; a nonzero constant proves nothing by itself and is
/// used only as a cheap screen before the real inverse computation.
template <ring_scalar K>
Polynomial<K> jacobian_det(const PolyMap<K>& f) {
  auto m = jacobian_matrix(f);
  std::vector<int> cols(static_cast<std::size_t>(f.nvars()));
  for (int j = 0; j < f.nvars(); ++j) cols[static_cast<std::size_t>(j)] = j;
  return detail::poly_det(m, std::move(cols), 0);
}

/// Degree-1-and-below part of each component as matrix + shift.
template <field_scalar K>
std::pair<Matrix<K>, std::vector<K>> affine_part(const PolyMap<K>& f) {
  int n = f.nvars();
  Matrix<K> a(static_cast<std::size_t>(n), std::vector<K>(static_cast<std::size_t>(n), K(0)));
  std::vector<K> b(static_cast<std::size_t>(n), K(0));
  Exponents e(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    b[static_cast<std::size_t>(i)] = f.component(i).coefficient(e);
    for (int j = 0; j < n; ++j) {
      Exponents ej(static_cast<std::size_t>(n), 0);
      ej[static_cast<std::size_t>(j)] = 1;
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.component(i).coefficient(ej);
    }
  }
  return {std::move(a), std::move(b)};
}

template <ring_scalar K>
bool is_affine(const PolyMap<K>& f) {
  return map_degree(f) <= 1;
}

/// The degree bound deg(f^-1) <= deg(f)^(n-1) that makes truncated
/// power-series inversion a complete decision procedure. Throws when the
/// bound does not fit in an int.
inline int inverse_degree_bound(int degree, int nvars) {
  if (degree < 1) throw std::invalid_argument("degree bound needs degree >= 1");
  std::int64_t bound = 1;
  for (int k = 0; k < nvars - 1; ++k) {
    bound *= degree;
    if (bound > std::numeric_limits<int>::max())
      throw std::overflow_error("inverse degree bound overflow");
  }
  return static_cast<int>(bound);
}

/// The unique map h with compose(f, h) = id modulo terms of total degree >
/// bound, computed by translating away constants, inverting the linear part
/// and running the fixed-point iteration h <- x - u(h) on the unipotent
/// remainder. Throws "no formal inverse" when the linear part is singular.
template <field_scalar K>
PolyMap<K> formal_inverse(const PolyMap<K>& f, int bound) {
  if (bound < 1) throw std::invalid_argument("inverse bound must be >= 1");
  int n = f.nvars();
  auto [lin, shift] = affine_part(f);
  auto lin_inv = try_inverse(lin);
  if (!lin_inv) throw std::domain_error("no formal inverse: singular linear part");

  // g = f - shift has zero constant part; ghat = lin^-1 . g = x + u with
  // every term of u of total degree >= 2.
  std::vector<Polynomial<K>> u;
  u.reserve(static_cast<std::size_t>(n));
  bool unipotent_trivial = true;
  for (int i = 0; i < n; ++i) {
    Polynomial<K> ghat_i(n);
    for (int j = 0; j < n; ++j) {
      const K& c = (*lin_inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      Polynomial<K> g_j = f.component(j);
      g_j -= Polynomial<K>::constant(n, shift[static_cast<std::size_t>(j)]);
      ghat_i += g_j * c;
    }
    ghat_i -= Polynomial<K>::variable(n, i);
    if (!ghat_i.is_zero()) unipotent_trivial = false;
    u.push_back(std::move(ghat_i));
  }

  // Fixed-point iteration: after k rounds h agrees with the true inverse of
  // x + u on all terms of total degree <= k + 1, so each round only needs
  // that much truncation. Cutting at the per-round degree instead of the
  // final bound keeps every iterate an exact prefix of the inverse; the
  // full-bound cut would instead drag provisional junk terms through every
  // round, with coefficients that snowball before cancelling.
  PolyMap<K> h = PolyMap<K>::identity(n);
  if (!unipotent_trivial) {
    PolyMap<K> umap(std::move(u));
    long long u_degree = map_degree(umap);
    for (int round = 0; round < bound; ++round) {
      int trunc = std::min(bound, round + 2);
      PolyMap<K> uh = compose(umap, h, trunc);
      std::vector<Polynomial<K>> next;
      next.reserve(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        next.push_back(Polynomial<K>::variable(n, i) - uh.component(i));
      PolyMap<K> hn(std::move(next));
      // An unchanged iterate alone may just be a gap in the inverse's degree
      // support; it proves an exact fixed point only once the truncation can
      // no longer have dropped anything from u(h).
      if (hn == h && u_degree * std::max(map_degree(h), 1) <= trunc) break;
      h = std::move(hn);
    }
  }

  // f = T_shift . lin . (x + u), so f^-1 = h . lin^-1 . T_(-shift).
  std::vector<Polynomial<K>> aff;
  aff.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Polynomial<K> p(n);
    for (int j = 0; j < n; ++j) {
      const K& c = (*lin_inv)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (c.is_zero()) continue;
      Polynomial<K> term = Polynomial<K>::variable(n, j);
      term -= Polynomial<K>::constant(n, shift[static_cast<std::size_t>(j)]);
      p += term * c;
    }
    aff.push_back(std::move(p));
  }
  return compose(h, PolyMap<K>(std::move(aff)), bound);
}

/// Invertible polynomial map carrying its exact inverse. Construction always
/// verifies compose(fwd, inv) = id = compose(inv, fwd) and the degree bound
/// deg(inv) <= deg(fwd)^(n-1), so every live instance is a certificate.
template <field_scalar K>
class Automorphism {
 public:
  /// Certifies an alleged forward/inverse pair exactly; throws when the pair
  /// does not compose to the identity both ways.
  static Automorphism from_inverse_pair(PolyMap<K> fwd, PolyMap<K> inv) {
    if (fwd.nvars() != inv.nvars()) throw std::invalid_argument("variable-count mismatch");
    PolyMap<K> id = PolyMap<K>::identity(fwd.nvars());
    if (compose(fwd, inv) != id || compose(inv, fwd) != id)
      throw std::invalid_argument("inverse pair does not compose to the identity");
    check_degree_bound(fwd, inv);
    return Automorphism(std::move(fwd), std::move(inv));
  }

  /// Complete decision procedure: screens the Jacobian determinant, runs the
  /// truncated power-series inverse and accepts only after both exact
  /// composition checks. The truncation degree escalates geometrically up to
  /// the proven inverse-degree bound, so typical inverses certify at a cheap
  /// truncation while a failure at the full bound still refutes
  /// invertibility. nullopt means "provably not an automorphism".
  static std::optional<Automorphism> certify(const PolyMap<K>& f) {
    int n = f.nvars();
    int d = map_degree(f);
    if (d < 1) return std::nullopt;
    Polynomial<K> jd = jacobian_det(f);
    if (jd.is_zero() || !jd.is_constant()) return std::nullopt;
    int bound = inverse_degree_bound(d, n);
    PolyMap<K> id = PolyMap<K>::identity(n);
    for (int trunc = std::min(bound, 2 * d);; trunc = std::min(bound, 2 * trunc)) {
      std::optional<PolyMap<K>> candidate;
      try {
        candidate = formal_inverse(f, trunc);
      } catch (const std::domain_error&) {
        return std::nullopt;
      }
      if (compose(f, *candidate) == id && compose(*candidate, f) == id) {
        check_degree_bound(f, *candidate);
        return Automorphism(PolyMap<K>(f), *std::move(candidate));
      }
      if (trunc >= bound) return std::nullopt;
    }
  }

  const PolyMap<K>& forward() const { return fwd_; }
  const PolyMap<K>& inverse() const { return inv_; }
  int nvars() const { return fwd_.nvars(); }
  int degree() const { return map_degree(fwd_); }

  Automorphism inverted() const { return Automorphism(inv_, fwd_); }

  bool operator==(const Automorphism& rhs) const { return fwd_ == rhs.fwd_; }
  bool operator!=(const Automorphism& rhs) const { return !(*this == rhs); }

 private:
  Automorphism(PolyMap<K> fwd, PolyMap<K> inv) : fwd_(std::move(fwd)), inv_(std::move(inv)) {}

  static void check_degree_bound(const PolyMap<K>& fwd, const PolyMap<K>& inv) {
    int bound = inverse_degree_bound(std::max(map_degree(fwd), 1), fwd.nvars());
    if (map_degree(inv) > bound)
      throw std::logic_error("certified inverse exceeds its degree bound");
  }

  PolyMap<K> fwd_;
  PolyMap<K> inv_;
};

/// Composition of certified automorphisms, certified for free.
template <field_scalar K>
Automorphism<K> compose(const Automorphism<K>& f, const Automorphism<K>& g) {
  return Automorphism<K>::from_inverse_pair(compose(f.forward(), g.forward()),
                                            compose(g.inverse(), f.inverse()));
}

/// Throwing wrapper around Automorphism::certify.
template <field_scalar K>
Automorphism<K> verify_automorphism(const PolyMap<K>& f) {
  auto cert = Automorphism<K>::certify(f);
  if (!cert) throw std::domain_error("not an automorphism");
  return *std::move(cert);
}

/// g . f . g^-1, the conjugate of a map by a certified automorphism.
template <field_scalar K>
PolyMap<K> conjugate(const Automorphism<K>& g, const PolyMap<K>& f) {
  return compose(g.forward(), compose(f, g.inverse()));
}

inline PolyMap<GaussianRational> apply_field_aut(FieldAut tau,
                                                 const PolyMap<GaussianRational>& f) {
  if (tau == FieldAut::identity) return f;
  std::vector<Polynomial<GaussianRational>> comps;
  comps.reserve(f.components().size());
  for (const auto& p : f.components()) comps.push_back(apply_field_aut(tau, p));
  return PolyMap<GaussianRational>(std::move(comps));
}

/// Twisted conjugation f |-> tau(g . f . g^-1). With tau = identity this is
/// plain conjugation; either way it is a group homomorphism on certified
/// automorphisms.
struct ThetaAut {
  Automorphism<GaussianRational> inner;
  FieldAut tau = FieldAut::identity;
};

inline PolyMap<GaussianRational> theta_apply(const ThetaAut& theta,
                                             const PolyMap<GaussianRational>& f) {
  return apply_field_aut(theta.tau, conjugate(theta.inner, f));
}

inline Automorphism<GaussianRational> theta_apply(const ThetaAut& theta,
                                                  const Automorphism<GaussianRational>& f) {
  return Automorphism<GaussianRational>::from_inverse_pair(
      theta_apply(theta, f.forward()), theta_apply(theta, f.inverse()));
}

}  // namespace polyaut
