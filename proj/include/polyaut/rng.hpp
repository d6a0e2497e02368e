#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"
#include "scalar.hpp"

namespace polyaut {

/// Seeded generator with platform-stable draws: mt19937_64 output is fixed
/// by the standard and the reductions below avoid distribution classes,
/// whose streams vary between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform-ish integer in [lo, hi], inclusive.
  int range(int lo, int hi) {
    if (hi < lo) throw std::invalid_argument("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return lo + static_cast<int>(eng_() % span);
  }

  /// True with probability num/den.
  bool chance(int num, int den) { return range(1, den) <= num; }

  /// Nonzero integer in [-mag, mag].
  int nonzero(int mag) {
    int v = range(1, mag);
    return chance(1, 2) ? v : -v;
  }

  /// Small Gaussian rational a + b*i with |a|,|b| <= mag; optionally nonzero
  /// and optionally with a denominator of 2.
  GaussianRational scalar(int mag, bool want_nonzero, bool allow_imaginary,
                          bool allow_half = false) {
    for (;;) {
      Rational re(range(-mag, mag));
      Rational im(allow_imaginary && chance(1, 3) ? range(-mag, mag) : 0);
      if (allow_half && chance(1, 3)) re /= 2;
      GaussianRational v(re, im);
      if (!want_nonzero || !v.is_zero()) return v;
    }
  }

  /// Random exponent vector with the given total degree.
  Exponents exponents(int nvars, int total) {
    Exponents e(static_cast<std::size_t>(nvars), 0);
    for (int k = 0; k < total; ++k) e[static_cast<std::size_t>(range(0, nvars - 1))] += 1;
    return e;
  }

  /// Random sparse polynomial: up to max_terms monomials of total degree <=
  /// max_degree with small coefficients.
  Polynomial<GaussianRational> polynomial(int nvars, int max_degree, int max_terms,
                                          bool allow_imaginary = false) {
    Polynomial<GaussianRational> p(nvars);
    int terms = range(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      Exponents e = exponents(nvars, range(0, max_degree));
      GaussianRational c = scalar(2, true, allow_imaginary);
      p += Polynomial<GaussianRational>::monomial(nvars, std::move(e), c);
    }
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace polyaut
