#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace polyaut {

/// Dense exponent vector of a monomial; entry j is the exponent of x_{j+1}.
using Exponents = std::vector<int>;

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

/// Graded lexicographic order: lower total degree first, then lex on the
/// exponent vector. Printing walks this order backwards, so output starts
/// with the graded-lex leading term.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    int da = total_degree(a);
    int db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }
};

/// degree() of the zero polynomial. A distinguished sentinel, deliberately
/// not -1: it never collides with any arithmetic on real degrees, and any
/// attempt to add it to a genuine degree is an obvious bug rather than a
/// silent off-by-one.
inline constexpr int degree_of_zero = std::numeric_limits<int>::min();

/// Sparse multivariate polynomial over a commutative ring K with a fixed
/// number of variables. Terms live in a graded-lex ordered map and never
/// contain zero coefficients.
template <ring_scalar K>
class Polynomial {
 public:
  using TermMap = std::map<Exponents, K, GradedLexLess>;

  /// The zero polynomial in `nvars` variables.
  explicit Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw std::invalid_argument("polynomial needs at least one variable");
  }

  static Polynomial constant(int nvars, K value) {
    Polynomial p(nvars);
    p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), std::move(value));
    return p;
  }

  /// The coordinate x_{index+1} (0-based index).
  static Polynomial variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    Polynomial p(nvars);
    p.add_term(std::move(e), K(1));
    return p;
  }

  static Polynomial monomial(int nvars, Exponents exps, K coeff) {
    if (static_cast<int>(exps.size()) != nvars)
      throw std::invalid_argument("exponent vector length does not match variable count");
    for (int e : exps)
      if (e < 0) throw std::invalid_argument("negative exponent in monomial");
    Polynomial p(nvars);
    p.add_term(std::move(exps), std::move(coeff));
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  K coefficient(const Exponents& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? K(0) : it->second;
  }

  /// Total degree; `degree_of_zero` for the zero polynomial.
  int degree() const {
    if (terms_.empty()) return degree_of_zero;
    return total_degree(terms_.rbegin()->first);
  }

  bool is_constant() const { return terms_.empty() || degree() == 0; }

  K constant_value() const {
    if (terms_.empty()) return K(0);
    if (degree() != 0) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
  }

  bool operator==(const Polynomial& rhs) const {
    return nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
  }
  bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

  Polynomial operator-() const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    require_same_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    require_same_vars(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) {
    *this = multiply(*this, rhs, std::numeric_limits<int>::max());
    return *this;
  }

  Polynomial& operator*=(const K& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c = c * scalar;
    prune();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    return multiply(a, b, std::numeric_limits<int>::max());
  }
  friend Polynomial operator*(Polynomial p, const K& s) { p *= s; return p; }
  friend Polynomial operator*(const K& s, Polynomial p) { p *= s; return p; }

  /// Product with all terms of total degree > max_degree dropped.
  static Polynomial multiply(const Polynomial& a, const Polynomial& b, int max_degree) {
    a.require_same_vars(b);
    Polynomial out(a.nvars_);
    if (a.terms_.empty() || b.terms_.empty() || max_degree < 0) return out;

    // Bounding box of the result; when it is small enough, accumulate into a
    // dense buffer with O(1) indexing instead of a tree. This is the hot
    // path for iterate and composition arithmetic.
    std::size_t n = static_cast<std::size_t>(a.nvars_);
    std::vector<int> width(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      int amax = 0, bmax = 0;
      for (const auto& [e, c] : a.terms_) amax = std::max(amax, e[j]);
      for (const auto& [e, c] : b.terms_) bmax = std::max(bmax, e[j]);
      width[j] = amax + bmax + 1;
    }
    std::int64_t cells = 1;
    bool dense_ok = true;
    for (std::size_t j = 0; j < n && dense_ok; ++j) {
      cells *= width[j];
      if (cells > dense_cell_budget) dense_ok = false;
    }

    if (dense_ok) {
      std::vector<K> buf(static_cast<std::size_t>(cells), K(0));
      std::vector<std::int64_t> stride(n, 1);
      for (std::size_t j = n; j-- > 1;) stride[j - 1] = stride[j] * width[j];
      for (const auto& [ea, ca] : a.terms_) {
        int da = total_degree(ea);
        std::int64_t base = 0;
        for (std::size_t j = 0; j < n; ++j) base += stride[j] * ea[j];
        for (const auto& [eb, cb] : b.terms_) {
          if (da + total_degree(eb) > max_degree) continue;
          std::int64_t idx = base;
          for (std::size_t j = 0; j < n; ++j) idx += stride[j] * eb[j];
          buf[static_cast<std::size_t>(idx)] += ca * cb;
        }
      }
      Exponents e(n, 0);
      for (std::int64_t idx = 0; idx < cells; ++idx) {
        const K& c = buf[static_cast<std::size_t>(idx)];
        if (c.is_zero()) continue;
        std::int64_t rest = idx;
        for (std::size_t j = 0; j < n; ++j) {
          e[j] = static_cast<int>(rest / stride[j]);
          rest %= stride[j];
        }
        out.terms_.emplace(e, c);
      }
      return out;
    }

    for (const auto& [ea, ca] : a.terms_) {
      int da = total_degree(ea);
      Exponents e(n, 0);
      for (const auto& [eb, cb] : b.terms_) {
        if (da + total_degree(eb) > max_degree) continue;
        for (std::size_t j = 0; j < n; ++j) e[j] = ea[j] + eb[j];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  /// Nonnegative power, optionally truncated above max_degree.
  Polynomial pow(int exponent, int max_degree = std::numeric_limits<int>::max()) const {
    if (exponent < 0) throw std::invalid_argument("negative polynomial power");
    Polynomial acc = constant(nvars_, K(1));
    Polynomial sq = *this;
    int e = exponent;
    while (e != 0) {
      if (e & 1) acc = multiply(acc, sq, max_degree);
      e >>= 1;
      if (e != 0) sq = multiply(sq, sq, max_degree);
    }
    return acc;
  }

  /// Copy with all terms of total degree > max_degree removed.
  Polynomial truncated(int max_degree) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      if (total_degree(e) > max_degree) break;
      out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
  }

  /// The homogeneous component of the given total degree.
  Polynomial homogeneous_part(int deg) const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
      int d = total_degree(e);
      if (d > deg) break;
      if (d == deg) out.terms_.emplace_hint(out.terms_.end(), e, c);
    }
    return out;
  }

  /// Top-degree homogeneous part; zero polynomial for zero input.
  Polynomial leading_form() const {
    if (terms_.empty()) return Polynomial(nvars_);
    return homogeneous_part(degree());
  }

  /// Coefficient of the graded-lex greatest monomial.
  K leading_coefficient() const {
    if (terms_.empty()) return K(0);
    return terms_.rbegin()->second;
  }

  /// Formal partial derivative with respect to x_{var+1}.
  Polynomial partial(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    Polynomial out(nvars_);
    std::size_t v = static_cast<std::size_t>(var);
    for (const auto& [e, c] : terms_) {
      if (e[v] == 0) continue;
      Exponents d = e;
      d[v] -= 1;
      out.add_term(std::move(d), c * K(e[v]));
    }
    return out;
  }

 private:
  inline static constexpr std::int64_t dense_cell_budget = std::int64_t(1) << 19;

  void require_same_vars(const Polynomial& rhs) const {
    if (nvars_ != rhs.nvars_) throw std::invalid_argument("variable-count mismatch");
  }

  void add_term(Exponents exps, K coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(std::move(exps), std::move(coeff));
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second.is_zero())
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  int nvars_;
  TermMap terms_;
};

/// p(values[0], ..., values[n-1]): substitution of polynomials for the
/// variables of p. All values must share a variable count, which becomes the
/// variable count of the result. Terms of total degree > max_degree are
/// dropped throughout, which keeps truncated power-series work bounded.
template <ring_scalar K>
Polynomial<K> substitute(const Polynomial<K>& p, const std::vector<Polynomial<K>>& values,
                         int max_degree = std::numeric_limits<int>::max()) {
  if (static_cast<int>(values.size()) != p.nvars())
    throw std::invalid_argument("substitution needs one value per variable");
  int out_vars = values.empty() ? 1 : values.front().nvars();
  for (const auto& v : values)
    if (v.nvars() != out_vars) throw std::invalid_argument("variable-count mismatch");

  // Memoized truncated powers of each value, grown on demand.
  std::vector<std::vector<Polynomial<K>>> powers(values.size());
  auto power = [&](std::size_t j, int e) -> const Polynomial<K>& {
    auto& ladder = powers[j];
    if (ladder.empty()) ladder.push_back(Polynomial<K>::constant(out_vars, K(1)));
    while (static_cast<int>(ladder.size()) <= e)
      ladder.push_back(Polynomial<K>::multiply(ladder.back(), values[j], max_degree));
    return ladder[static_cast<std::size_t>(e)];
  };

  Polynomial<K> out(out_vars);
  for (const auto& [exps, coeff] : p.terms()) {
    Polynomial<K> term = Polynomial<K>::constant(out_vars, coeff);
    for (std::size_t j = 0; j < values.size(); ++j) {
      if (exps[j] == 0) continue;
      term = Polynomial<K>::multiply(term, power(j, exps[j]), max_degree);
      if (term.is_zero()) break;
    }
    out += term;
  }
  return out;
}

/// Coefficient-wise field automorphism; a ring homomorphism on polynomials.
inline Polynomial<GaussianRational> apply_field_aut(FieldAut tau,
                                                    const Polynomial<GaussianRational>& p) {
  if (tau == FieldAut::identity) return p;
  Polynomial<GaussianRational> out(p.nvars());
  for (const auto& [e, c] : p.terms())
    out += Polynomial<GaussianRational>::monomial(p.nvars(), e, c.conj());
  return out;
}

}  // namespace polyaut
