#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "polymap.hpp"
#include "polynomial.hpp"
#include "rng.hpp"
#include "torus.hpp"

namespace polyaut {

/// Per coordinate, the exponent vectors of total degree <= degree_bound that
/// may appear in a map commuting with the group: alpha is allowed in
/// coordinate i iff <a, alpha> = a_i (mod k) for every generator a.
struct CommutantSupport {
  int nvars = 1;
  int degree_bound = 1;
  std::vector<std::vector<Exponents>> allowed;

  /// True when each coordinate admits only its own linear monomial, so every
  /// commuting map of this degree is diagonal-linear with no search needed.
  bool forces_diagonal() const {
    for (int i = 0; i < nvars; ++i) {
      const auto& set = allowed[static_cast<std::size_t>(i)];
      if (set.size() != 1) return false;
      const Exponents& e = set.front();
      for (int j = 0; j < nvars; ++j)
        if (e[static_cast<std::size_t>(j)] != (j == i ? 1 : 0)) return false;
    }
    return true;
  }
};

namespace detail {

inline void walk_exponents(int nvars, int max_total, Exponents& e, int pos, int used,
                           const std::function<void(const Exponents&)>& visit) {
  if (pos == nvars) {
    visit(e);
    return;
  }
  for (int v = 0; v + used <= max_total; ++v) {
    e[static_cast<std::size_t>(pos)] = v;
    walk_exponents(nvars, max_total, e, pos + 1, used + v, visit);
  }
  e[static_cast<std::size_t>(pos)] = 0;
}

inline bool congruent_for_all(const std::vector<std::vector<int>>& vectors, const Exponents& alpha,
                              int i, int k) {
  for (const auto& a : vectors) {
    long lhs = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) lhs += static_cast<long>(a[j]) * alpha[j];
    long rhs = a[static_cast<std::size_t>(i)];
    if (((lhs - rhs) % k + k) % k != 0) return false;
  }
  return true;
}

}  // namespace detail

/// Exact commutation constraints at bounded degree. It suffices to impose
/// the congruence on generators: the condition is additive in the group
/// element, so it then holds for every element.
inline CommutantSupport commutant_support(const FiniteDiagonalGroup& mu, int d) {
  if (d < 1) throw std::invalid_argument("degree bound must be >= 1");
  CommutantSupport support;
  support.nvars = mu.n;
  support.degree_bound = d;
  support.allowed.assign(static_cast<std::size_t>(mu.n), {});
  Exponents e(static_cast<std::size_t>(mu.n), 0);
  detail::walk_exponents(mu.n, d, e, 0, 0, [&](const Exponents& alpha) {
    for (int i = 0; i < mu.n; ++i)
      if (detail::congruent_for_all(mu.generators, alpha, i, mu.k))
        support.allowed[static_cast<std::size_t>(i)].push_back(alpha);
  });
  return support;
}

/// Exact test that f commutes with every element of mu. Commutation with the
/// diagonal element of exponent vector a is equivalent to <a, alpha> = a_i
/// (mod k) on every monomial alpha of f_i, which needs no root of unity in
/// the coefficient field and is checked across all of mu_elements.
inline bool is_in_centralizer(const PolyMap<GaussianRational>& f, const FiniteDiagonalGroup& mu) {
  if (f.nvars() != mu.n) throw std::invalid_argument("size mismatch");
  auto elements = mu_elements(mu);
  for (int i = 0; i < mu.n; ++i)
    for (const auto& [alpha, c] : f.component(i).terms())
      if (!detail::congruent_for_all(elements, alpha, i, mu.k)) return false;
  return true;
}

inline bool is_diagonal_linear(const PolyMap<GaussianRational>& f) {
  int n = f.nvars();
  for (int i = 0; i < n; ++i) {
    const auto& p = f.component(i);
    if (p.term_count() != 1) return false;
    const auto& [e, c] = *p.terms().begin();
    for (int j = 0; j < n; ++j)
      if (e[static_cast<std::size_t>(j)] != (j == i ? 1 : 0)) return false;
  }
  return true;
}

struct CentralizerReport {
  CommutantSupport support;
  bool forced = false;
  int samples = 0;
  int certified = 0;
  bool all_certified_diagonal = true;
  std::optional<PolyMap<GaussianRational>> counterexample;
};

/// Degree-bounded centralizer check. When the support forces diagonal-linear
/// maps the verdict needs no search; otherwise support-compatible
/// endomorphisms are sampled, each certified or rejected by the complete
/// automorphism decision, and every certified one is tested for being
/// diagonal-linear.
inline CentralizerReport centralizer_equals_Dn(const FiniteDiagonalGroup& mu, int d, int samples,
                                               std::uint64_t seed) {
  CentralizerReport report;
  report.support = commutant_support(mu, d);
  report.forced = report.support.forces_diagonal();
  if (report.forced) return report;

  Rng rng(seed);
  int n = mu.n;
  for (int s = 0; s < samples; ++s) {
    std::vector<Polynomial<GaussianRational>> comps;
    comps.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      Polynomial<GaussianRational> p(n);
      for (const auto& alpha : report.support.allowed[static_cast<std::size_t>(i)]) {
        // Bias toward sparse candidates so invertible samples appear often.
        if (!rng.chance(1, 2)) continue;
        GaussianRational c = rng.scalar(2, false, false);
        if (c.is_zero()) continue;
        p += Polynomial<GaussianRational>::monomial(n, alpha, c);
      }
      comps.push_back(std::move(p));
    }
    PolyMap<GaussianRational> candidate(std::move(comps));
    report.samples += 1;
    auto cert = Automorphism<GaussianRational>::certify(candidate);
    if (!cert) continue;
    report.certified += 1;
    if (!is_diagonal_linear(candidate)) {
      report.all_certified_diagonal = false;
      if (!report.counterexample) report.counterexample = candidate;
    }
  }
  return report;
}

}  // namespace polyaut
