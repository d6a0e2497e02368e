#include <catch2/catch_amalgamated.hpp>

#include <polyaut/io.hpp>
#include <polyaut/polymap.hpp>
#include <polyaut/rng.hpp>
#include <polyaut/tame.hpp>

using namespace polyaut;

namespace {

using Poly = Polynomial<GaussianRational>;
using Map = PolyMap<GaussianRational>;
using Aut = Automorphism<GaussianRational>;

}  // namespace

TEST_CASE("map construction validates components", "[polymap]") {
  REQUIRE_THROWS_AS(Map(std::vector<Poly>{}), std::invalid_argument);
  REQUIRE_THROWS_AS(Map({Poly::variable(2, 0)}), std::invalid_argument);
  REQUIRE(Map::identity(3).is_identity());
  REQUIRE(map_degree(Map::identity(3)) == 1);
  REQUIRE(map_degree(Map({Poly(1)})) == degree_of_zero);
}

TEST_CASE("affine factories produce the expected components", "[polymap]") {
  auto t = Map::translation({GaussianRational(1), GaussianRational(-2)});
  REQUIRE(t == parse_map("[x1 + 1; x2 - 2]"));
  auto d = Map::diagonal({GaussianRational(2), GaussianRational(3)});
  REQUIRE(d == parse_map("[2*x1; 3*x2]"));
  Matrix<GaussianRational> m{{GaussianRational(0), GaussianRational(1)},
                             {GaussianRational(1), GaussianRational(0)}};
  auto a = Map::affine(m, {GaussianRational(1), GaussianRational(0)});
  REQUIRE(a == parse_map("[x2 + 1; x1]"));
  REQUIRE_THROWS_AS(Map::affine(m, {GaussianRational(1)}), std::invalid_argument);
}

TEST_CASE("composition substitutes right into left", "[polymap]") {
  auto f = parse_map("[x1 + x2^2; x2]");
  auto g = parse_map("[x2; x1]");
  REQUIRE(compose(f, g) == parse_map("[x2 + x1^2; x1]"));
  REQUIRE(compose(g, f) == parse_map("[x2; x1 + x2^2]"));
  REQUIRE(compose(f, Map::identity(2)) == f);
  REQUIRE(compose(Map::identity(2), f) == f);
  REQUIRE_THROWS_AS(compose(f, Map::identity(3)), std::invalid_argument);
  // Truncated composition drops high-degree terms along the way.
  REQUIRE(compose(f, f, 1) == parse_map("[x1; x2]"));
}

TEST_CASE("jacobian determinant has the chain-rule value", "[polymap]") {
  REQUIRE(to_string(jacobian_det(parse_map("[x1^2; x2]"))) == "2*x1");
  REQUIRE(jacobian_det(parse_map("[x1 + x2^2; x2]")) == Poly::constant(2, GaussianRational(1)));
  Rng rng(11);
  for (int t = 0; t < 15; ++t) {
    int n = rng.range(1, 2);
    std::vector<Poly> fc, gc;
    for (int j = 0; j < n; ++j) {
      fc.push_back(rng.polynomial(n, 2, 2));
      gc.push_back(rng.polynomial(n, 2, 2));
    }
    Map f(fc), g(gc);
    REQUIRE(jacobian_det(compose(f, g)) ==
            substitute(jacobian_det(f), g.components()) * jacobian_det(g));
  }
}

TEST_CASE("inverse degree bound is d to the n minus 1", "[polymap]") {
  REQUIRE(inverse_degree_bound(3, 2) == 3);
  REQUIRE(inverse_degree_bound(2, 3) == 4);
  REQUIRE(inverse_degree_bound(5, 1) == 1);
  REQUIRE(inverse_degree_bound(2, 2) == 2);
  REQUIRE(inverse_degree_bound(1, 9) == 1);
  REQUIRE_THROWS_AS(inverse_degree_bound(10, 12), std::overflow_error);
  REQUIRE_THROWS_AS(inverse_degree_bound(0, 2), std::invalid_argument);
}

TEST_CASE("formal inverse solves pinned examples", "[polymap]") {
  auto f1 = parse_map("[x1 + x2^2; x2]");
  REQUIRE(formal_inverse(f1, inverse_degree_bound(2, 2)) == parse_map("[x1 - x2^2; x2]"));

  auto f2 = parse_map("[x1 + x2^2; x2 + 1]");
  auto inv2 = formal_inverse(f2, inverse_degree_bound(2, 2));
  REQUIRE(inv2 == parse_map("[x1 - (x2 - 1)^2; x2 - 1]"));
  REQUIRE(compose(f2, inv2) == Map::identity(2));
  REQUIRE(compose(inv2, f2) == Map::identity(2));

  REQUIRE_THROWS_AS(formal_inverse(parse_map("[x1 + x2; x1 + x2]"), 4), std::domain_error);
  REQUIRE_THROWS_AS(formal_inverse(f1, 0), std::invalid_argument);
}

TEST_CASE("certification accepts real automorphisms", "[polymap]") {
  auto henon = verify_automorphism(parse_map("[x2; x1 + x2^2]"));
  REQUIRE(henon.degree() == 2);
  REQUIRE(henon.inverse() == parse_map("[x2 - x1^2; x1]"));
  REQUIRE(compose(henon.forward(), henon.inverse()) == Map::identity(2));
  REQUIRE(henon.inverted().forward() == henon.inverse());
  REQUIRE(map_degree(henon.inverse()) <= inverse_degree_bound(henon.degree(), 2));
}

TEST_CASE("certification rejects non-automorphisms", "[polymap]") {
  REQUIRE(!Aut::certify(parse_map("[x1^2; x2]")));
  REQUIRE(!Aut::certify(parse_map("[x1*x2; x2]")));
  REQUIRE(!Aut::certify(parse_map("[x1 + x2; x1 + x2]")));
  REQUIRE(!Aut::certify(parse_map("[1; x2]")));
  REQUIRE_THROWS_WITH(verify_automorphism(parse_map("[x1^2; x2]")), "not an automorphism");
  REQUIRE_THROWS_AS(verify_automorphism(parse_map("[x1^2; x2]")), std::domain_error);
}

TEST_CASE("inverse pairs are checked both ways", "[polymap]") {
  auto ok = Aut::from_inverse_pair(parse_map("[x1 + x2^2; x2]"), parse_map("[x1 - x2^2; x2]"));
  REQUIRE(ok.degree() == 2);
  REQUIRE_THROWS_AS(
      Aut::from_inverse_pair(parse_map("[x1 + x2^2; x2]"), parse_map("[x1 + x2^2; x2]")),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      Aut::from_inverse_pair(parse_map("[x1 + x2^2; x2]"), parse_map("[x1; x2; x3]")),
      std::invalid_argument);
}

TEST_CASE("certified composition stays certified", "[polymap]") {
  auto f = verify_automorphism(parse_map("[x1 + x2^2; x2]"));
  auto g = verify_automorphism(parse_map("[x2; x1]"));
  auto fg = compose(f, g);
  REQUIRE(fg.forward() == compose(f.forward(), g.forward()));
  REQUIRE(compose(fg.forward(), fg.inverse()) == Map::identity(2));
}

TEST_CASE("conjugation and twists act as expected", "[polymap]") {
  auto g = verify_automorphism(parse_map("[x2; x1]"));
  auto f = parse_map("[x1 + x2^2; x2]");
  REQUIRE(conjugate(g, f) == parse_map("[x1; x2 + x1^2]"));

  ThetaAut theta{g, FieldAut::conjugation};
  auto h = parse_map("[i*x1; x2]");
  // Conjugate by the swap, then conjugate every coefficient.
  REQUIRE(theta_apply(theta, h) == parse_map("[x1; -i*x2]"));

  auto a1 = verify_automorphism(parse_map("[x1 + x2^2; x2]"));
  auto a2 = verify_automorphism(parse_map("[x1; x2 + 1]"));
  REQUIRE(theta_apply(theta, compose(a1, a2)).forward() ==
          compose(theta_apply(theta, a1), theta_apply(theta, a2)).forward());
}

TEST_CASE("affine part extraction matches the factories", "[polymap]") {
  auto f = parse_map("[2*x1 + x2 + 3; x2 - 1 + x1^2]");
  auto [a, b] = affine_part(f);
  REQUIRE(a[0][0] == GaussianRational(2));
  REQUIRE(a[0][1] == GaussianRational(1));
  REQUIRE(a[1][0] == GaussianRational(0));
  REQUIRE(a[1][1] == GaussianRational(1));
  REQUIRE(b[0] == GaussianRational(3));
  REQUIRE(b[1] == GaussianRational(-1));
  REQUIRE(is_affine(parse_map("[x1 + 1; x2]")));
  REQUIRE(!is_affine(f));
}
