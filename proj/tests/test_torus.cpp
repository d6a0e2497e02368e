#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <polyaut/centralizer.hpp>
#include <polyaut/io.hpp>
#include <polyaut/torus.hpp>

using namespace polyaut;

namespace {

GaussianRational gq(int re, int im = 0) {
  return GaussianRational(Rational(re), Rational(im));
}

}  // namespace

TEST_CASE("diagonal elements form a group with exact entries", "[torus]") {
  DiagonalElement d({gq(2), gq(-3)});
  REQUIRE(d.n() == 2);
  REQUIRE(d.entry(1) == gq(-3));
  REQUIRE_THROWS_AS(DiagonalElement({gq(1), gq(0)}), std::invalid_argument);
  REQUIRE_THROWS_AS(DiagonalElement({}), std::invalid_argument);

  auto e = d * d.inverse();
  REQUIRE(e.entry(0) == gq(1));
  REQUIRE(e.entry(1) == gq(1));
  REQUIRE(d.to_map() == parse_map("[2*x1; -3*x2]"));
}

TEST_CASE("characters evaluate as Laurent monomials", "[torus]") {
  DiagonalElement d({gq(2), gq(3)});
  REQUIRE(eval_character(Character({1, 0}), d) == gq(2));
  REQUIRE(eval_character(Character({1, -2}), d) == GaussianRational(Rational(2) / 9));
  REQUIRE(eval_character(Character({0, 0}), d) == gq(1));
  REQUIRE_THROWS_AS(eval_character(Character({1}), d), std::invalid_argument);
}

TEST_CASE("admissible characters have one slot equal to one", "[torus]") {
  REQUIRE(is_in_Xu(Character({1, 0})));
  REQUIRE(is_in_Xu(Character({1, -2})));
  REQUIRE(is_in_Xu(Character({-1, 1})));
  REQUIRE(is_in_Xu(Character({0, 0, 1})));
  REQUIRE(!is_in_Xu(Character({2, -1})));
  REQUIRE(!is_in_Xu(Character({1, 1})));
  REQUIRE(!is_in_Xu(Character({0, 0})));
  REQUIRE(!is_in_Xu(Character({1, 2})));
}

TEST_CASE("enumeration lists admissible characters in pinned order", "[torus]") {
  auto xs = enumerate_Xu(2, 2);
  std::vector<Character> expect{Character({1, 0}),  Character({1, -1}), Character({1, -2}),
                                Character({0, 1}),  Character({-1, 1}), Character({-2, 1})};
  REQUIRE(xs == expect);

  for (int n = 1; n <= 4; ++n) {
    for (int bound = 0; bound <= 3; ++bound) {
      auto all = enumerate_Xu(n, bound);
      std::size_t count = static_cast<std::size_t>(n);
      for (int k = 0; k < n - 1; ++k) count *= static_cast<std::size_t>(bound + 1);
      REQUIRE(all.size() == count);
      for (const auto& chi : all) REQUIRE(is_in_Xu(chi));
      REQUIRE(std::set<Character>(all.begin(), all.end()).size() == all.size());
    }
  }
  REQUIRE_THROWS_AS(enumerate_Xu(0, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(enumerate_Xu(2, -1), std::invalid_argument);
}

TEST_CASE("dominance compares prefix sums at equal totals", "[torus]") {
  REQUIRE(is_dominant(Character({1, 0, -1})));
  REQUIRE(!is_dominant(Character({-1, 1})));

  REQUIRE(dominance_leq(Character({0, 0}), Character({1, -1})));
  REQUIRE(dominance_leq(Character({-1, 1}), Character({1, -1})));
  REQUIRE(!dominance_leq(Character({1, -1}), Character({-1, 1})));
  // Different totals never compare.
  REQUIRE(!dominance_leq(Character({0, 0}), Character({1, 0})));
  // Equal totals can still be incomparable.
  REQUIRE(!dominance_leq(Character({2, -2, 0}), Character({1, 1, -2})));
  REQUIRE(!dominance_leq(Character({1, 1, -2}), Character({2, -2, 0})));
  REQUIRE(dominance_leq(Character({1, -1}), Character({1, -1})));
  REQUIRE_THROWS_AS(dominance_leq(Character({1}), Character({1, 0})), std::invalid_argument);
}

TEST_CASE("translation witnesses sit strictly below their character", "[torus]") {
  REQUIRE(translation_lemma_witness(Character({1, -1})) == Character({0, 0}));
  REQUIRE(translation_lemma_witness(Character({1, 0, -2})) == Character({0, 0, -1}));
  REQUIRE_THROWS_AS(translation_lemma_witness(Character({1, 0})), std::invalid_argument);
  REQUIRE_THROWS_AS(translation_lemma_witness(Character({2, -1})), std::invalid_argument);
  REQUIRE_THROWS_AS(translation_lemma_witness(Character({-1, 1})), std::invalid_argument);

  for (int n = 2; n <= 4; ++n) {
    for (const auto& chi : enumerate_Xu(n, 4)) {
      if (!is_dominant(chi)) continue;
      bool first_axis_only = chi.coords.front() == 1;
      for (std::size_t j = 1; j < chi.coords.size(); ++j)
        if (chi.coords[j] != 0) first_axis_only = false;
      if (first_axis_only) continue;
      auto w = translation_lemma_witness(chi);
      REQUIRE(is_dominant(w));
      REQUIRE(dominance_leq(w, chi));
      REQUIRE(w != chi);
      REQUIRE(!is_in_Xu(w));
    }
  }
}

TEST_CASE("finite diagonal groups enumerate their elements", "[torus]") {
  auto g = FiniteDiagonalGroup::full_rank(2, 3);
  REQUIRE(mu_elements(g).size() == 9);

  FiniteDiagonalGroup diag;
  diag.n = 2;
  diag.k = 2;
  diag.generators = {{1, 1}};
  auto elems = mu_elements(diag);
  REQUIRE(elems == std::vector<std::vector<int>>{{0, 0}, {1, 1}});

  REQUIRE_THROWS_AS(mu_elements(FiniteDiagonalGroup::full_rank(2, 4), 8), std::length_error);
  REQUIRE_THROWS_AS(FiniteDiagonalGroup::full_rank(0, 2), std::invalid_argument);
}

TEST_CASE("roots of unity exist in the field only for small orders", "[torus]") {
  REQUIRE(root_of_unity_pow(1, 5) == gq(1));
  REQUIRE(root_of_unity_pow(2, 1) == gq(-1));
  REQUIRE(root_of_unity_pow(2, -1) == gq(-1));
  REQUIRE(root_of_unity_pow(4, 1) == GaussianRational::i());
  REQUIRE(root_of_unity_pow(4, 2) == gq(-1));
  REQUIRE(root_of_unity_pow(4, 3) == -GaussianRational::i());
  REQUIRE(root_of_unity_pow(4, 7) == -GaussianRational::i());
  REQUIRE_THROWS_AS(root_of_unity_pow(3, 1), std::domain_error);

  auto g = FiniteDiagonalGroup::full_rank(2, 4);
  REQUIRE(mu_element_map(g, {1, 3}) ==
          PolyMap<GaussianRational>::diagonal({GaussianRational::i(), -GaussianRational::i()}));
}

TEST_CASE("commutant support tables match hand computation", "[centralizer]") {
  auto mu2 = FiniteDiagonalGroup::full_rank(2, 2);
  auto support = commutant_support(mu2, 3);
  std::set<Exponents> first(support.allowed[0].begin(), support.allowed[0].end());
  REQUIRE(first == std::set<Exponents>{{1, 0}, {3, 0}, {1, 2}});
  std::set<Exponents> second(support.allowed[1].begin(), support.allowed[1].end());
  REQUIRE(second == std::set<Exponents>{{0, 1}, {0, 3}, {2, 1}});
  REQUIRE(!support.forces_diagonal());

  auto mu3 = FiniteDiagonalGroup::full_rank(2, 3);
  auto forced = commutant_support(mu3, 2);
  REQUIRE(forced.forces_diagonal());
  REQUIRE(forced.allowed[0] == std::vector<Exponents>{{1, 0}});
  REQUIRE(forced.allowed[1] == std::vector<Exponents>{{0, 1}});

  auto line = commutant_support(FiniteDiagonalGroup::full_rank(1, 2), 5);
  std::set<Exponents> odd(line.allowed[0].begin(), line.allowed[0].end());
  REQUIRE(odd == std::set<Exponents>{{1}, {3}, {5}});
  REQUIRE_THROWS_AS(commutant_support(mu2, 0), std::invalid_argument);
}

TEST_CASE("congruence membership agrees with explicit composition", "[centralizer]") {
  auto mu = FiniteDiagonalGroup::full_rank(2, 4);
  auto f = parse_map("[x1^2*x2; x2]");
  bool fast = is_in_centralizer(f, mu);
  bool slow = true;
  for (const auto& expo : mu_elements(mu)) {
    auto d = mu_element_map(mu, expo);
    if (compose(d, f) != compose(f, d)) slow = false;
  }
  REQUIRE(fast == slow);

  REQUIRE(is_in_centralizer(parse_map("[x1^3; x2]"), FiniteDiagonalGroup::full_rank(2, 2)));
  REQUIRE(!is_in_centralizer(parse_map("[x2; x1]"), FiniteDiagonalGroup::full_rank(2, 4)));
  REQUIRE(is_diagonal_linear(parse_map("[2*x1; -3*x2]")));
  REQUIRE(!is_diagonal_linear(parse_map("[x1 + x2; x2]")));
}

TEST_CASE("centralizer reports cover forced and sampled regimes", "[centralizer]") {
  auto forced = centralizer_equals_Dn(FiniteDiagonalGroup::full_rank(2, 3), 2, 10, 5);
  REQUIRE(forced.forced);
  REQUIRE(forced.samples == 0);
  REQUIRE(!forced.counterexample.has_value());

  auto sampled = centralizer_equals_Dn(FiniteDiagonalGroup::full_rank(1, 2), 5, 80, 5);
  REQUIRE(!sampled.forced);
  REQUIRE(sampled.samples == 80);
  REQUIRE(sampled.certified >= 1);
  REQUIRE(sampled.all_certified_diagonal);
  REQUIRE(!sampled.counterexample.has_value());
}
