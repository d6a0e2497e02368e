#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "linalg.hpp"
#include "polymap.hpp"
#include "polynomial.hpp"
#include "rng.hpp"
#include "scalar.hpp"

namespace polyaut {

/// x |-> A x + b with A invertible.
class AffineGenerator {
 public:
  AffineGenerator(Matrix<GaussianRational> matrix, std::vector<GaussianRational> shift)
      : matrix_(std::move(matrix)), shift_(std::move(shift)) {
    std::size_t n = matrix_.size();
    if (n == 0 || shift_.size() != n) throw std::invalid_argument("matrix/shift size mismatch");
    for (const auto& row : matrix_)
      if (row.size() != n) throw std::invalid_argument("matrix is not square");
    if (determinant(matrix_).is_zero())
      throw std::invalid_argument("affine generator matrix is singular");
  }

  int nvars() const { return static_cast<int>(matrix_.size()); }
  const Matrix<GaussianRational>& matrix() const { return matrix_; }
  const std::vector<GaussianRational>& shift() const { return shift_; }

  AffineGenerator inverse() const {
    Matrix<GaussianRational> inv = *try_inverse(matrix_);
    std::vector<GaussianRational> back = matrix_vector(inv, shift_);
    for (auto& v : back) v = -v;
    return AffineGenerator(std::move(inv), std::move(back));
  }

  bool operator==(const AffineGenerator& rhs) const {
    return matrix_ == rhs.matrix_ && shift_ == rhs.shift_;
  }

 private:
  Matrix<GaussianRational> matrix_;
  std::vector<GaussianRational> shift_;
};

/// x_axis |-> x_axis + p with p independent of x_axis; other coordinates
/// fixed.
class ElementaryGenerator {
 public:
  ElementaryGenerator(int axis, Polynomial<GaussianRational> summand)
      : axis_(axis), summand_(std::move(summand)) {
    if (axis_ < 0 || axis_ >= summand_.nvars())
      throw std::invalid_argument("elementary axis out of range");
    for (const auto& [e, c] : summand_.terms())
      if (e[static_cast<std::size_t>(axis_)] != 0)
        throw std::invalid_argument("elementary summand depends on its own axis");
  }

  int axis() const { return axis_; }
  int nvars() const { return summand_.nvars(); }
  const Polynomial<GaussianRational>& summand() const { return summand_; }

  ElementaryGenerator inverse() const { return ElementaryGenerator(axis_, -summand_); }

  bool operator==(const ElementaryGenerator& rhs) const {
    return axis_ == rhs.axis_ && summand_ == rhs.summand_;
  }

 private:
  int axis_;
  Polynomial<GaussianRational> summand_;
};

using TameGenerator = std::variant<AffineGenerator, ElementaryGenerator>;

inline int generator_nvars(const TameGenerator& g) {
  return std::visit([](const auto& v) { return v.nvars(); }, g);
}

inline TameGenerator generator_inverse(const TameGenerator& g) {
  return std::visit([](const auto& v) { return TameGenerator(v.inverse()); }, g);
}

inline PolyMap<GaussianRational> generator_map(const TameGenerator& g) {
  if (const auto* aff = std::get_if<AffineGenerator>(&g))
    return PolyMap<GaussianRational>::affine(aff->matrix(), aff->shift());
  const auto& el = std::get<ElementaryGenerator>(g);
  int n = el.nvars();
  std::vector<Polynomial<GaussianRational>> comps;
  comps.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto p = Polynomial<GaussianRational>::variable(n, i);
    if (i == el.axis()) p += el.summand();
    comps.push_back(std::move(p));
  }
  return PolyMap<GaussianRational>(std::move(comps));
}

/// Word in the tame generators. Factors are listed in application order: the
/// first factor acts first, so the word [f1; ...; fk] evaluates to
/// fk . ... . f1.
class TameWord {
 public:
  explicit TameWord(int nvars) : nvars_(nvars) {
    if (nvars_ < 1) throw std::invalid_argument("word needs at least one variable");
  }

  TameWord(int nvars, std::vector<TameGenerator> factors) : TameWord(nvars) {
    for (auto& f : factors) push_back(std::move(f));
  }

  void push_back(TameGenerator g) {
    if (generator_nvars(g) != nvars_) throw std::invalid_argument("variable-count mismatch");
    factors_.push_back(std::move(g));
  }

  int nvars() const { return nvars_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  const std::vector<TameGenerator>& factors() const { return factors_; }

 private:
  int nvars_;
  std::vector<TameGenerator> factors_;
};

/// Reversed list of inverted generators; evaluates to the inverse.
inline TameWord inverse_word(const TameWord& w) {
  TameWord out(w.nvars());
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
    out.push_back(generator_inverse(*it));
  return out;
}

/// Evaluates a word to a certified automorphism. The inverse map comes from
/// the reversed-inverted word, so certification cross-checks the two
/// closed-form routes against each other exactly.
inline Automorphism<GaussianRational> eval_word(const TameWord& w) {
  int n = w.nvars();
  PolyMap<GaussianRational> fwd = PolyMap<GaussianRational>::identity(n);
  for (const auto& g : w.factors()) fwd = compose(generator_map(g), fwd);
  PolyMap<GaussianRational> inv = PolyMap<GaussianRational>::identity(n);
  for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
    inv = compose(generator_map(generator_inverse(*it)), inv);
  return Automorphism<GaussianRational>::from_inverse_pair(std::move(fwd), std::move(inv));
}

namespace detail {

/// The scalar c with lhs = c * rhs, when one exists.
inline std::optional<GaussianRational> proportionality(const Polynomial<GaussianRational>& lhs,
                                                       const Polynomial<GaussianRational>& rhs) {
  if (rhs.is_zero()) return std::nullopt;
  GaussianRational c = lhs.leading_coefficient() / rhs.leading_coefficient();
  if (lhs == rhs * c) return c;
  return std::nullopt;
}

}  // namespace detail

/// Plane factorization by degree reduction: while the working automorphism
/// is nonlinear, the leading form of the higher-degree component is a scalar
/// multiple of a power of the other component's leading form, so an
/// elementary move cancels it and strictly reduces the map degree; equal
/// component degrees are first broken by an affine shear. Collected inverse
/// moves followed by the terminal affine factor rebuild f exactly.
///
/// degree_log, when supplied, receives the map degree after each step.
/// Throws "factorization failed" only if a reduction step cannot be found,
/// which certified plane automorphisms never trigger.
inline TameWord jvk_factor(const Automorphism<GaussianRational>& f,
                           std::vector<int>* degree_log = nullptr) {
  if (f.nvars() != 2) throw std::invalid_argument("factorization is implemented for the plane");
  PolyMap<GaussianRational> g = f.forward();
  std::vector<TameGenerator> undo;  // s_j^-1 in discovery order
  if (degree_log) {
    degree_log->clear();
    degree_log->push_back(map_degree(g));
  }

  int guard = 4 * map_degree(g) + 16;
  while (map_degree(g) > 1) {
    if (--guard < 0) throw std::runtime_error("factorization failed");
    int d1 = g.component(0).degree();
    int d2 = g.component(1).degree();
    if (d1 == d2) {
      auto c = detail::proportionality(g.component(0).leading_form(),
                                       g.component(1).leading_form());
      if (!c) throw std::runtime_error("factorization failed");
      Matrix<GaussianRational> shear = identity_matrix<GaussianRational>(2);
      shear[0][1] = -*c;
      Matrix<GaussianRational> unshear = identity_matrix<GaussianRational>(2);
      unshear[0][1] = *c;
      std::vector<GaussianRational> zero(2, GaussianRational(0));
      g = compose(PolyMap<GaussianRational>::affine(shear, zero), g);
      undo.emplace_back(AffineGenerator(unshear, zero));
    } else {
      int big = d1 > d2 ? 0 : 1;
      int small = 1 - big;
      int before = std::max(d1, d2);
      int e = std::min(d1, d2);
      if (e < 1 || before % e != 0) throw std::runtime_error("factorization failed");
      int k = before / e;
      auto c = detail::proportionality(g.component(big).leading_form(),
                                       g.component(small).leading_form().pow(k));
      if (!c) throw std::runtime_error("factorization failed");
      Exponents power(2, 0);
      power[static_cast<std::size_t>(small)] = k;
      auto cancel = Polynomial<GaussianRational>::monomial(2, power, -*c);
      g = compose(generator_map(ElementaryGenerator(big, cancel)), g);
      if (map_degree(g) >= before) throw std::runtime_error("factorization failed");
      undo.emplace_back(ElementaryGenerator(big, -cancel));
    }
    if (degree_log) degree_log->push_back(map_degree(g));
  }

  TameWord word(2);
  if (!g.is_identity()) {
    auto [a, b] = affine_part(g);
    word.push_back(AffineGenerator(std::move(a), std::move(b)));
  }
  for (auto it = undo.rbegin(); it != undo.rend(); ++it) word.push_back(*it);
  return word;
}

/// Reproducible random word: per factor, a small-coefficient affine or
/// elementary generator; a draw is rejected when it would push the degree
/// of the evaluated word or of its inverse past degree_budget, and after
/// too many rejections the slot falls back to an affine factor, which never
/// raises either degree.
inline TameWord random_tame(int n, int length, int deg_cap, std::uint64_t seed,
                            int degree_budget = 64) {
  if (n < 1 || length < 0 || deg_cap < 1) throw std::invalid_argument("bad parameters");
  Rng rng(seed);
  TameWord word(n);
  PolyMap<GaussianRational> fwd = PolyMap<GaussianRational>::identity(n);
  PolyMap<GaussianRational> inv = PolyMap<GaussianRational>::identity(n);

  auto random_affine = [&]() -> TameGenerator {
    for (;;) {
      Matrix<GaussianRational> m(static_cast<std::size_t>(n),
                                 std::vector<GaussianRational>(static_cast<std::size_t>(n)));
      for (auto& row : m)
        for (auto& v : row) v = GaussianRational(rng.range(-2, 2));
      if (determinant(m).is_zero()) continue;
      std::vector<GaussianRational> b(static_cast<std::size_t>(n));
      for (auto& v : b) v = GaussianRational(rng.range(-2, 2));
      return AffineGenerator(std::move(m), std::move(b));
    }
  };
  auto random_elementary = [&]() -> TameGenerator {
    int axis = rng.range(0, n - 1);
    Polynomial<GaussianRational> p(n);
    int terms = rng.range(1, 2);
    for (int t = 0; t < terms; ++t) {
      Exponents e(static_cast<std::size_t>(n), 0);
      int total = rng.range(1, deg_cap);
      for (int k = 0; k < total; ++k) {
        int var = rng.range(0, n - 2);
        if (var >= axis) var += 1;  // skip the axis variable
        e[static_cast<std::size_t>(var)] += 1;
      }
      p += Polynomial<GaussianRational>::monomial(n, std::move(e),
                                                  GaussianRational(rng.nonzero(2)));
    }
    if (p.is_zero()) p = Polynomial<GaussianRational>::constant(n, GaussianRational(1));
    return ElementaryGenerator(axis, std::move(p));
  };

  for (int slot = 0; slot < length; ++slot) {
    for (int attempt = 0;; ++attempt) {
      TameGenerator g = (n >= 2 && attempt < 24 && rng.chance(3, 5)) ? random_elementary()
                                                                     : random_affine();
      PolyMap<GaussianRational> nf = compose(generator_map(g), fwd);
      PolyMap<GaussianRational> ni = compose(inv, generator_map(generator_inverse(g)));
      if (map_degree(nf) <= degree_budget && map_degree(ni) <= degree_budget) {
        fwd = std::move(nf);
        inv = std::move(ni);
        word.push_back(std::move(g));
        break;
      }
    }
  }
  return word;
}

}  // namespace polyaut
