#include <catch2/catch_amalgamated.hpp>

#include <polyaut/derivation.hpp>
#include <polyaut/io.hpp>
#include <polyaut/rng.hpp>

using namespace polyaut;

namespace {

using Poly = Polynomial<GaussianRational>;
using Map = PolyMap<GaussianRational>;
using Der = Derivation<GaussianRational>;

GaussianRational gq(int re, int im = 0) {
  return GaussianRational(Rational(re), Rational(im));
}

}  // namespace

TEST_CASE("derivations validate and apply coordinatewise", "[derivation]") {
  REQUIRE_THROWS_AS(Der(std::vector<Poly>{}), std::invalid_argument);
  REQUIRE_THROWS_AS(Der({Poly::variable(2, 0)}), std::invalid_argument);
  REQUIRE(Der::zero(3).is_zero());

  auto delta = parse_derivation("[x2; 0] d/dx");
  REQUIRE(apply(delta, parse_polynomial("x1", 2)) == parse_polynomial("x2", 2));
  REQUIRE(apply(delta, parse_polynomial("x2", 2)).is_zero());
  REQUIRE(apply(delta, parse_polynomial("x1^2", 2)) == parse_polynomial("2*x1*x2", 2));
  REQUIRE_THROWS_AS(apply(delta, parse_polynomial("x1", 1)), std::invalid_argument);
}

TEST_CASE("application satisfies the Leibniz rule", "[derivation]") {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    int n = rng.range(2, 3);
    std::vector<Poly> coeffs;
    for (int j = 0; j < n; ++j) coeffs.push_back(rng.polynomial(n, 2, 2, true));
    Der delta(coeffs);
    Poly p = rng.polynomial(n, 3, 3, true);
    Poly q = rng.polynomial(n, 3, 3, true);
    REQUIRE(apply(delta, p * q) == apply(delta, p) * q + p * apply(delta, q));
    REQUIRE(apply(delta, p + q) == apply(delta, p) + apply(delta, q));
  }
}

TEST_CASE("nilpotency certificates record chain lengths", "[derivation]") {
  auto delta = parse_derivation("[x2; 0] d/dx");
  auto cert = certify_nilpotent(delta, 8);
  REQUIRE(cert.certified);
  REQUIRE(cert.orders == std::vector<int>{2, 1});

  auto cascade = parse_derivation("[x2; x3; 0] d/dx");
  auto cert3 = certify_nilpotent(cascade, 8);
  REQUIRE(cert3.certified);
  REQUIRE(cert3.orders == std::vector<int>{3, 2, 1});

  auto euler = parse_derivation("[x1] d/dx");
  REQUIRE(!certify_nilpotent(euler, 16).certified);
  REQUIRE_THROWS_AS(certify_nilpotent(delta, 0), std::invalid_argument);
}

TEST_CASE("flows have pinned closed forms", "[derivation]") {
  auto delta = parse_derivation("[x2; 0] d/dx");
  auto half = GaussianRational(Rational(1) / 2);
  REQUIRE(flow(delta, gq(3)).forward() == parse_map("[x1 + 3*x2; x2]"));
  REQUIRE(flow(delta, gq(3)).inverse() == parse_map("[x1 - 3*x2; x2]"));

  // Second-order chain picks up the 1/2 factorial exactly.
  auto cascade = parse_derivation("[x2; x3; 0] d/dx");
  auto f = flow(cascade, gq(1));
  REQUIRE(f.forward() == parse_map("[x1 + x2 + 1/2*x3; x2 + x3; x3]"));
  REQUIRE(flow(cascade, half).forward() ==
          parse_map("[x1 + 1/2*x2 + 1/8*x3; x2 + 1/2*x3; x3]"));

  REQUIRE(flow(delta, gq(0)).forward().is_identity());
  REQUIRE_THROWS_AS(flow(parse_derivation("[x1] d/dx"), gq(1), 16), std::domain_error);
}

TEST_CASE("flows obey the one-parameter group law", "[derivation]") {
  Rng rng(22);
  for (int t = 0; t < 25; ++t) {
    int n = rng.range(2, 3);
    // Strictly triangular coefficients guarantee nilpotency.
    std::vector<Poly> coeffs;
    for (int i = 0; i < n; ++i) {
      Poly p(n);
      if (i + 1 < n) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(rng.range(i + 1, n - 1))] = rng.range(1, 2);
        p = Poly::monomial(n, std::move(e), GaussianRational(rng.nonzero(2)));
      }
      coeffs.push_back(std::move(p));
    }
    Der delta(coeffs);
    GaussianRational s = rng.scalar(3, false, true);
    GaussianRational u = rng.scalar(3, false, true);
    REQUIRE(compose(flow(delta, s), flow(delta, u)) == flow(delta, s + u));
  }
}

TEST_CASE("monomial derivations classify to their normal form", "[derivation]") {
  auto delta = parse_derivation("[-2*x2^3; 0] d/dx");
  auto form = classify_Dn_normalized(delta);
  REQUIRE(form.has_value());
  REQUIRE(form->axis == 0);
  REQUIRE(form->gamma == Exponents{0, 3});
  REQUIRE(form->coefficient == gq(-2));
  REQUIRE(form->character() == Character({1, -3}));
  REQUIRE(is_in_Xu(form->character()));

  REQUIRE(!classify_Dn_normalized(parse_derivation("[x2 + x2^2; 0] d/dx")).has_value());
  REQUIRE(!classify_Dn_normalized(parse_derivation("[x2; x1] d/dx")).has_value());
  REQUIRE(!classify_Dn_normalized(parse_derivation("[x1*x2; 0] d/dx")).has_value());
  REQUIRE_THROWS_AS(classify_Dn_normalized(Der::zero(2)), std::invalid_argument);
}

TEST_CASE("diagonal conjugation scales by the character value", "[derivation]") {
  auto delta = parse_derivation("[x2^2; 0] d/dx");
  DiagonalElement d({gq(2), gq(3)});
  auto moved = conj_by_diagonal(d, delta);
  // Character (1,-2) evaluates to 2/9 at (2,3).
  auto form = classify_Dn_normalized(moved);
  REQUIRE(form.has_value());
  REQUIRE(form->gamma == Exponents{0, 2});
  REQUIRE(form->coefficient == GaussianRational(Rational(2) / 9));
  REQUIRE(eval_character(Character({1, -2}), d) == GaussianRational(Rational(2) / 9));

  // Conjugating the flow equals flowing for the rescaled time.
  auto d_aut = verify_automorphism(d.to_map());
  GaussianRational s = gq(3);
  GaussianRational lam = eval_character(Character({1, -2}), d);
  REQUIRE(conjugate(d_aut, flow(delta, s).forward()) == flow(delta, lam * s).forward());
  REQUIRE_THROWS_AS(conj_by_diagonal(DiagonalElement({gq(1)}), delta), std::invalid_argument);
}

TEST_CASE("monomial family powers have a closed-form coefficient", "[derivation]") {
  REQUIRE(b_coefficient<GaussianRational>({gq(1), gq(-1)}, {1, 0}, 0, 2) == gq(2));
  REQUIRE(b_coefficient<GaussianRational>({gq(1), gq(1)}, {1, 1}, 0, 3) == gq(15));

  Rng rng(23);
  for (int t = 0; t < 40; ++t) {
    int n = rng.range(1, 3);
    std::vector<GaussianRational> a;
    std::vector<int> beta;
    for (int j = 0; j < n; ++j) {
      a.push_back(gq(rng.range(-2, 2)));
      beta.push_back(rng.range(0, 2));
    }
    auto delta = monomial_family_derivation(a, beta);
    int axis = rng.range(0, n - 1);
    int m = rng.range(1, 5);
    Poly q = Poly::variable(n, axis);
    for (int l = 0; l < m; ++l) q = apply(delta, q);
    REQUIRE(q.term_count() <= 1);
    Exponents target(beta.begin(), beta.end());
    for (int& e : target) e *= m;
    target[static_cast<std::size_t>(axis)] += 1;
    REQUIRE(q.coefficient(target) == b_coefficient(a, beta, axis, m));
    if (!q.is_zero()) REQUIRE(q.terms().begin()->first == target);
  }

  REQUIRE_THROWS_AS(monomial_family_derivation<GaussianRational>({gq(1)}, {-1}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(b_coefficient<GaussianRational>({gq(1)}, {1}, 1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(b_coefficient<GaussianRational>({gq(1)}, {1}, 0, 0), std::invalid_argument);
}
