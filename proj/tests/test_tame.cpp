#include <catch2/catch_amalgamated.hpp>

#include <polyaut/io.hpp>
#include <polyaut/rng.hpp>
#include <polyaut/tame.hpp>

using namespace polyaut;

namespace {

using Poly = Polynomial<GaussianRational>;
using Map = PolyMap<GaussianRational>;

GaussianRational gq(int v) { return GaussianRational(v); }

Matrix<GaussianRational> swap_matrix() {
  return {{gq(0), gq(1)}, {gq(1), gq(0)}};
}

}  // namespace

TEST_CASE("affine generators require an invertible matrix", "[tame]") {
  REQUIRE_THROWS_AS(AffineGenerator({{gq(1), gq(2)}, {gq(2), gq(4)}}, {gq(0), gq(0)}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(AffineGenerator({{gq(1), gq(0)}}, {gq(0), gq(0)}), std::invalid_argument);

  AffineGenerator a({{gq(2), gq(1)}, {gq(1), gq(1)}}, {gq(3), gq(-1)});
  auto round = compose(generator_map(TameGenerator(a)), generator_map(TameGenerator(a.inverse())));
  REQUIRE(round == Map::identity(2));
  REQUIRE(a == a);
  REQUIRE(generator_nvars(TameGenerator(a)) == 2);
}

TEST_CASE("elementary generators never touch their own axis", "[tame]") {
  REQUIRE_THROWS_AS(ElementaryGenerator(0, parse_polynomial("x1", 2)), std::invalid_argument);
  REQUIRE_THROWS_AS(ElementaryGenerator(2, parse_polynomial("x1", 2)), std::invalid_argument);
  REQUIRE_THROWS_AS(ElementaryGenerator(-1, parse_polynomial("x2", 2)), std::invalid_argument);

  ElementaryGenerator e(0, parse_polynomial("x2^2", 2));
  REQUIRE(generator_map(TameGenerator(e)) == parse_map("[x1 + x2^2; x2]"));
  REQUIRE(generator_map(TameGenerator(e.inverse())) == parse_map("[x1 - x2^2; x2]"));
  // Constant summands are legal elementary moves.
  ElementaryGenerator c(1, parse_polynomial("3", 2));
  REQUIRE(generator_map(TameGenerator(c)) == parse_map("[x1; x2 + 3]"));
}

TEST_CASE("words apply their first factor first", "[tame]") {
  TameWord w(2);
  w.push_back(ElementaryGenerator(0, parse_polynomial("x2^2", 2)));
  w.push_back(AffineGenerator(swap_matrix(), {gq(0), gq(0)}));
  auto f = eval_word(w);
  REQUIRE(f.forward() == parse_map("[x2; x1 + x2^2]"));
  REQUIRE(f.inverse() == parse_map("[x2 - x1^2; x1]"));

  REQUIRE_THROWS_AS(TameWord(0), std::invalid_argument);
  TameWord bad(3);
  REQUIRE_THROWS_AS(bad.push_back(ElementaryGenerator(0, parse_polynomial("x2", 2))),
                    std::invalid_argument);
  REQUIRE(eval_word(TameWord(2)).forward().is_identity());
}

TEST_CASE("reversed inverted words evaluate to the inverse", "[tame]") {
  Rng rng(31);
  for (int t = 0; t < 12; ++t) {
    int n = rng.range(2, 3);
    auto w = random_tame(n, rng.range(1, 4), 2, rng.next());
    auto f = eval_word(w);
    auto g = eval_word(inverse_word(w));
    REQUIRE(g.forward() == f.inverse());
    REQUIRE(g.inverse() == f.forward());
    REQUIRE(compose(f.forward(), g.forward()) == Map::identity(n));
  }
}

TEST_CASE("plane factorization recovers pinned words", "[tame]") {
  auto shear = verify_automorphism(parse_map("[x1 + x2^2; x2]"));
  auto word = jvk_factor(shear);
  REQUIRE(word.size() == 1);
  REQUIRE(to_string(word) == "[E1{x2^2}]");

  // An affine map factors as a single affine word.
  auto aff = verify_automorphism(parse_map("[2*x1 + x2 + 1; x1]"));
  auto aword = jvk_factor(aff);
  REQUIRE(aword.size() == 1);
  REQUIRE(eval_word(aword).forward() == aff.forward());

  // The identity needs no factors at all.
  auto id = verify_automorphism(parse_map("[x1; x2]"));
  REQUIRE(jvk_factor(id).empty());

  auto henon = verify_automorphism(parse_map("[x2; x1 + x2^2]"));
  auto hword = jvk_factor(henon);
  REQUIRE(eval_word(hword).forward() == henon.forward());

  auto three = verify_automorphism(parse_map("[x1; x2; x3]"));
  REQUIRE_THROWS_AS(jvk_factor(three), std::invalid_argument);
}

TEST_CASE("plane factorization strictly reduces the degree", "[tame]") {
  Rng rng(32);
  for (int t = 0; t < 20; ++t) {
    auto w = random_tame(2, rng.range(1, 4), 2, rng.next());
    auto f = eval_word(w);
    std::vector<int> log;
    auto factored = jvk_factor(f, &log);
    REQUIRE(eval_word(factored).forward() == f.forward());
    REQUIRE(log.front() == f.degree());
    for (std::size_t j = 0; j + 1 < log.size(); ++j) REQUIRE(log[j + 1] <= log[j]);
    for (std::size_t j = 0; j + 2 < log.size(); ++j) REQUIRE(log[j + 2] < log[j]);
    REQUIRE(log.back() == 1);
  }
}

TEST_CASE("random words are reproducible and budgeted", "[tame]") {
  auto w1 = random_tame(3, 5, 3, 77, 32);
  auto w2 = random_tame(3, 5, 3, 77, 32);
  REQUIRE(w1.factors() == w2.factors());
  REQUIRE(w1.size() == 5);

  auto f = eval_word(w1);
  REQUIRE(f.degree() <= 32);
  REQUIRE(map_degree(f.inverse()) <= 32);

  auto line = random_tame(1, 3, 1, 5);
  REQUIRE(eval_word(line).degree() == 1);

  REQUIRE_THROWS_AS(random_tame(0, 1, 1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(random_tame(2, -1, 1, 1), std::invalid_argument);
  REQUIRE_THROWS_AS(random_tame(2, 1, 0, 1), std::invalid_argument);
}
