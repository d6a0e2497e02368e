#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <stdexcept>
#include <string>
#include <utility>

namespace polyaut {

/// Arbitrary-precision rational, always kept in lowest terms by the backend.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Element of Q(i): re + im*i with exact rational parts.
///
/// Arithmetic is exact; there is no floating point anywhere in the library.
/// The real/imaginary parts inherit the lowest-terms invariant from
/// cpp_rational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int value) : re_(value) {}
  GaussianRational(long value) : re_(value) {}
  GaussianRational(Integer value) : re_(std::move(value)) {}
  GaussianRational(Rational real) : re_(std::move(real)) {}
  GaussianRational(Rational real, Rational imag)
      : re_(std::move(real)), im_(std::move(imag)) {}

  /// The imaginary unit.
  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == 1; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  /// re^2 + im^2, the norm over Q; zero iff the value is zero.
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& rhs) {
    re_ += rhs.re_;
    if (!rhs.im_.is_zero()) im_ += rhs.im_;
    return *this;
  }

  GaussianRational& operator-=(const GaussianRational& rhs) {
    re_ -= rhs.re_;
    if (!rhs.im_.is_zero()) im_ -= rhs.im_;
    return *this;
  }

  GaussianRational& operator*=(const GaussianRational& rhs) {
    if (im_.is_zero() && rhs.im_.is_zero()) {
      re_ *= rhs.re_;
      return *this;
    }
    Rational re = re_ * rhs.re_ - im_ * rhs.im_;
    Rational im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  GaussianRational& operator/=(const GaussianRational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    if (im_.is_zero() && rhs.im_.is_zero()) {
      re_ /= rhs.re_;
      return *this;
    }
    Rational n = rhs.norm();
    Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
    Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) {
    a += b;
    return a;
  }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) {
    a -= b;
    return a;
  }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) {
    a *= b;
    return a;
  }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) {
    a /= b;
    return a;
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

 private:
  Rational re_;
  Rational im_;
};

/// Integer power with negative exponents allowed for nonzero bases.
inline GaussianRational pow(const GaussianRational& base, long exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw std::domain_error("zero raised to a negative power");
    return GaussianRational(1) / pow(base, -exponent);
  }
  GaussianRational acc(1);
  GaussianRational sq = base;
  unsigned long e = static_cast<unsigned long>(exponent);
  while (e != 0) {
    if (e & 1) acc *= sq;
    e >>= 1;
    if (e != 0) sq *= sq;
  }
  return acc;
}

/// The field automorphisms of Q(i) available to theta twists.
enum class FieldAut { identity, conjugation };

inline GaussianRational apply(FieldAut tau, const GaussianRational& value) {
  return tau == FieldAut::conjugation ? value.conj() : value;
}

/// Commutative ring scalars usable as polynomial coefficients.
template <class K>
concept ring_scalar = std::regular<K> && requires(const K a, const K b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a.is_zero() } -> std::convertible_to<bool>;
  K(0);
  K(1);
};

/// Ring scalars with exact division by nonzero elements.
template <class K>
concept field_scalar = ring_scalar<K> && requires(const K a, const K b) {
  { a / b } -> std::convertible_to<K>;
};

static_assert(field_scalar<GaussianRational>);

}  // namespace polyaut
