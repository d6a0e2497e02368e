#include <catch2/catch_amalgamated.hpp>

#include <polyaut/rng.hpp>
#include <polyaut/scalar.hpp>

using namespace polyaut;

namespace {

GaussianRational gq(int re, int im = 0) {
  return GaussianRational(Rational(re), Rational(im));
}

}  // namespace

TEST_CASE("the imaginary unit squares to minus one", "[scalar]") {
  GaussianRational i = GaussianRational::i();
  REQUIRE(i * i == gq(-1));
  REQUIRE(i * i * i * i == gq(1));
  REQUIRE(-i == i.conj());
}

TEST_CASE("rational constructors keep exact parts", "[scalar]") {
  GaussianRational half(Rational(1) / 2);
  REQUIRE(half.real() == Rational(1) / 2);
  REQUIRE(half.imag().is_zero());
  REQUIRE(half + half == gq(1));

  GaussianRational z(Rational(3), Rational(-2));
  REQUIRE(z.real() == 3);
  REQUIRE(z.imag() == -2);
  REQUIRE(z.conj().imag() == 2);
  REQUIRE(z.norm() == Rational(13));
}

TEST_CASE("field operations are exact", "[scalar]") {
  Rng rng(91);
  for (int t = 0; t < 200; ++t) {
    GaussianRational a = rng.scalar(6, false, true, true);
    GaussianRational b = rng.scalar(6, true, true, true);
    REQUIRE((a / b) * b == a);
    REQUIRE((a + b) - b == a);
    REQUIRE((a * b).conj() == a.conj() * b.conj());
    REQUIRE(a * b == b * a);
  }
}

TEST_CASE("norm vanishes only at zero", "[scalar]") {
  REQUIRE(gq(0).norm().is_zero());
  REQUIRE(gq(0).is_zero());
  REQUIRE(!gq(0, 1).is_zero());
  REQUIRE(gq(3, 4).norm() == Rational(25));
}

TEST_CASE("division by zero is rejected", "[scalar]") {
  REQUIRE_THROWS_AS(gq(1) / gq(0), std::domain_error);
}

TEST_CASE("integer powers handle negative exponents", "[scalar]") {
  GaussianRational z(Rational(1), Rational(1));
  REQUIRE(pow(z, 2) == gq(0, 2));
  REQUIRE(pow(z, 0) == gq(1));
  REQUIRE(pow(z, -2) * pow(z, 2) == gq(1));
  REQUIRE(pow(gq(2), -3) == GaussianRational(Rational(1) / 8));
  REQUIRE_THROWS_AS(pow(gq(0), -1), std::domain_error);
}

TEST_CASE("field automorphisms act on scalars", "[scalar]") {
  GaussianRational z(Rational(2), Rational(-5));
  REQUIRE(apply(FieldAut::identity, z) == z);
  REQUIRE(apply(FieldAut::conjugation, z) == z.conj());
  REQUIRE(apply(FieldAut::conjugation, apply(FieldAut::conjugation, z)) == z);
}

TEST_CASE("seeded draws are reproducible", "[rng]") {
  Rng a(1234), b(1234);
  for (int t = 0; t < 50; ++t) {
    REQUIRE(a.next() == b.next());
    REQUIRE(a.range(-9, 9) == b.range(-9, 9));
    REQUIRE(a.scalar(4, true, true) == b.scalar(4, true, true));
  }
  REQUIRE_THROWS_AS(a.range(3, 2), std::invalid_argument);
  for (int t = 0; t < 50; ++t) REQUIRE(a.nonzero(3) != 0);
}
