#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polymap.hpp"
#include "polynomial.hpp"
#include "scalar.hpp"
#include "torus.hpp"

namespace polyaut {

/// Vector field delta = sum_i h_i d/dx_i acting as a derivation of the
/// polynomial ring.
template <field_scalar K>
class Derivation {
 public:
  explicit Derivation(std::vector<Polynomial<K>> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("derivation needs at least one coefficient");
    int n = static_cast<int>(coeffs_.size());
    for (const auto& h : coeffs_)
      if (h.nvars() != n) throw std::invalid_argument("variable-count mismatch");
  }

  static Derivation zero(int n) {
    return Derivation(std::vector<Polynomial<K>>(static_cast<std::size_t>(n), Polynomial<K>(n)));
  }

  int nvars() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Polynomial<K>>& coefficients() const { return coeffs_; }
  const Polynomial<K>& coefficient(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }

  bool is_zero() const {
    for (const auto& h : coeffs_)
      if (!h.is_zero()) return false;
    return true;
  }

  bool operator==(const Derivation& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const Derivation& rhs) const { return !(*this == rhs); }

 private:
  std::vector<Polynomial<K>> coeffs_;
};

template <field_scalar K>
Polynomial<K> apply(const Derivation<K>& delta, const Polynomial<K>& p) {
  if (delta.nvars() != p.nvars()) throw std::invalid_argument("variable-count mismatch");
  Polynomial<K> out(p.nvars());
  for (int j = 0; j < p.nvars(); ++j) {
    if (delta.coefficient(j).is_zero()) continue;
    out += delta.coefficient(j) * p.partial(j);
  }
  return out;
}

struct NilpotencyCertificate {
  bool certified = false;
  /// orders[i] is the least m with delta^m(x_i) = 0; meaningful when
  /// certified.
  std::vector<int> orders;
  int max_power = 0;
};

namespace detail {

/// chains[i] = [x_i, delta(x_i), delta^2(x_i), ...], stopping at the first
/// zero (exclusive) or after max_power nonzero applications.
template <field_scalar K>
std::vector<std::vector<Polynomial<K>>> derivation_chains(const Derivation<K>& delta,
                                                          int max_power) {
  int n = delta.nvars();
  std::vector<std::vector<Polynomial<K>>> chains;
  chains.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    std::vector<Polynomial<K>> chain;
    chain.push_back(Polynomial<K>::variable(n, i));
    while (static_cast<int>(chain.size()) <= max_power) {
      Polynomial<K> next = apply(delta, chain.back());
      if (next.is_zero()) break;
      chain.push_back(std::move(next));
    }
    chains.push_back(std::move(chain));
  }
  return chains;
}

}  // namespace detail

/// Certifies delta^m(x_i) = 0 for some m <= max_power on every coordinate,
/// which extends to the whole ring since delta is a derivation.
template <field_scalar K>
NilpotencyCertificate certify_nilpotent(const Derivation<K>& delta, int max_power) {
  if (max_power < 1) throw std::invalid_argument("max_power must be >= 1");
  auto chains = detail::derivation_chains(delta, max_power);
  NilpotencyCertificate cert;
  cert.max_power = max_power;
  cert.certified = true;
  for (const auto& chain : chains) {
    if (static_cast<int>(chain.size()) > max_power) {
      cert.certified = false;
      cert.orders.clear();
      return cert;
    }
    cert.orders.push_back(static_cast<int>(chain.size()));
  }
  return cert;
}

/// exp(s*delta) on coordinates: component i is sum_m s^m/m! delta^m(x_i),
/// a finite sum for certified delta. Returns a certified automorphism whose
/// inverse is the flow at -s. Throws when nilpotency cannot be certified
/// within max_power.
template <field_scalar K>
Automorphism<K> flow(const Derivation<K>& delta, const K& s, int max_power = 64) {
  if (max_power < 1) throw std::invalid_argument("max_power must be >= 1");
  auto chains = detail::derivation_chains(delta, max_power);
  for (const auto& chain : chains)
    if (static_cast<int>(chain.size()) > max_power)
      throw std::domain_error("derivation not certified nilpotent within max_power");

  int n = delta.nvars();
  auto series = [&](const K& scalar) {
    std::vector<Polynomial<K>> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (const auto& chain : chains) {
      Polynomial<K> comp = chain.front();
      K power(1);
      K factorial(1);
      for (std::size_t m = 1; m < chain.size(); ++m) {
        power = power * scalar;
        factorial = factorial * K(static_cast<int>(m));
        comp += chain[m] * (power / factorial);
      }
      comps.push_back(std::move(comp));
    }
    return PolyMap<K>(std::move(comps));
  };
  return Automorphism<K>::from_inverse_pair(series(s), series(-s));
}

/// delta = c * x^gamma * d/dx_axis with gamma[axis] = 0; the shape of every
/// derivation whose flow is normalized by the diagonal group.
template <field_scalar K>
struct MonomialDerivationForm {
  int axis = 0;  // 0-based
  Exponents gamma;
  K coefficient = K(0);

  /// e_axis - gamma, the character by which diagonal conjugation scales the
  /// flow parameter.
  Character character() const {
    std::vector<int> c(gamma.begin(), gamma.end());
    for (int& v : c) v = -v;
    c[static_cast<std::size_t>(axis)] += 1;
    return Character(std::move(c));
  }
};

/// Structural test for diagonal normalization: exactly one nonzero
/// coefficient, that coefficient a single monomial not involving its own
/// axis. Returns nullopt for nonzero derivations of any other shape; throws
/// on the zero derivation.
template <field_scalar K>
std::optional<MonomialDerivationForm<K>> classify_Dn_normalized(const Derivation<K>& delta) {
  if (delta.is_zero()) throw std::invalid_argument("zero derivation has no classification");
  int axis = -1;
  for (int i = 0; i < delta.nvars(); ++i) {
    if (delta.coefficient(i).is_zero()) continue;
    if (axis >= 0) return std::nullopt;
    axis = i;
  }
  const Polynomial<K>& h = delta.coefficient(axis);
  if (h.term_count() != 1) return std::nullopt;
  const auto& [exps, c] = *h.terms().begin();
  if (exps[static_cast<std::size_t>(axis)] != 0) return std::nullopt;
  MonomialDerivationForm<K> form;
  form.axis = axis;
  form.gamma = exps;
  form.coefficient = c;
  return form;
}

/// Derivation of the conjugated flow d . exp(s delta) . d^-1: coefficient i
/// becomes t_i * h_i(x_1/t_1, ..., x_n/t_n). For a classified monomial form
/// this is multiplication by the character value (e_axis - gamma)(d).
inline Derivation<GaussianRational> conj_by_diagonal(const DiagonalElement& d,
                                                     const Derivation<GaussianRational>& delta) {
  if (d.n() != delta.nvars()) throw std::invalid_argument("size mismatch");
  int n = delta.nvars();
  std::vector<Polynomial<GaussianRational>> unscale;
  unscale.reserve(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    unscale.push_back(Polynomial<GaussianRational>::variable(n, j) *
                      (GaussianRational(1) / d.entry(j)));
  std::vector<Polynomial<GaussianRational>> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    coeffs.push_back(substitute(delta.coefficient(i), unscale) * d.entry(i));
  return Derivation<GaussianRational>(std::move(coeffs));
}

/// The monomial-family derivation sum_j a_j x^(beta+e_j) d/dx_j.
template <field_scalar K>
Derivation<K> monomial_family_derivation(const std::vector<K>& a, const std::vector<int>& beta) {
  int n = static_cast<int>(a.size());
  if (static_cast<int>(beta.size()) != n) throw std::invalid_argument("size mismatch");
  for (int b : beta)
    if (b < 0) throw std::invalid_argument("negative exponent in beta");
  std::vector<Polynomial<K>> coeffs;
  coeffs.reserve(a.size());
  for (int j = 0; j < n; ++j) {
    Exponents e(beta.begin(), beta.end());
    e[static_cast<std::size_t>(j)] += 1;
    if (a[static_cast<std::size_t>(j)].is_zero())
      coeffs.push_back(Polynomial<K>(n));
    else
      coeffs.push_back(Polynomial<K>::monomial(n, std::move(e), a[static_cast<std::size_t>(j)]));
  }
  return Derivation<K>(std::move(coeffs));
}

/// Closed form for the single coefficient of delta^m(x_i) when delta is the
/// monomial-family derivation above: with b = sum_j a_j beta_j,
/// the value is a_i * prod_{l=1}^{m-1} (l*b + a_i).
template <field_scalar K>
K b_coefficient(const std::vector<K>& a, const std::vector<int>& beta, int axis, int m) {
  if (a.size() != beta.size()) throw std::invalid_argument("size mismatch");
  if (axis < 0 || axis >= static_cast<int>(a.size()))
    throw std::invalid_argument("axis out of range");
  for (int b : beta)
    if (b < 0) throw std::invalid_argument("negative exponent in beta");
  if (m < 1) throw std::invalid_argument("power must be >= 1");
  K b(0);
  for (std::size_t j = 0; j < a.size(); ++j) b += a[j] * K(beta[j]);
  K out = a[static_cast<std::size_t>(axis)];
  for (int l = 1; l < m; ++l) out *= K(l) * b + a[static_cast<std::size_t>(axis)];
  return out;
}

}  // namespace polyaut
