#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <polyaut/polyaut.hpp>

namespace {

using namespace polyaut;

int g_exit = 0;

/// Ceiling on the degrees open-ended computations may reach, overridable
/// through POLYAUT_DEGREE_BUDGET.
int degree_budget() {
  const char* raw = std::getenv("POLYAUT_DEGREE_BUDGET");
  if (!raw) return 64;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < 1 || v > 1'000'000)
    throw std::invalid_argument("POLYAUT_DEGREE_BUDGET must be a positive integer");
  return static_cast<int>(v);
}

bool record_mode(const std::string& format) { return format == "record"; }

void emit_map(const std::string& format, const PolyMap<GaussianRational>& f) {
  if (record_mode(format)) {
    std::cout << "components: " << to_string(f) << "\n";
    std::cout << "degree: " << map_degree(f) << "\n";
  } else {
    std::cout << to_string(f) << "\n";
  }
}

void emit_automorphism(const std::string& format, const Automorphism<GaussianRational>& f) {
  if (record_mode(format)) {
    std::cout << "components: " << to_string(f.forward()) << "\n";
    std::cout << "degree: " << f.degree() << "\n";
    std::cout << "jacobian_det: " << to_string(jacobian_det(f.forward())) << "\n";
    std::cout << "inverse: " << to_string(f.inverse()) << "\n";
    std::cout << "verdict: automorphism\n";
  } else {
    std::cout << "automorphism of degree " << f.degree() << "\n";
    std::cout << "forward: " << to_string(f.forward()) << "\n";
    std::cout << "inverse: " << to_string(f.inverse()) << "\n";
  }
}

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"plain", "record"}))
      ->default_val("plain");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for polynomial automorphisms of affine space"};
  app.require_subcommand(1);

  // compose
  auto compose_args = std::make_shared<std::vector<std::string>>(2);
  auto compose_fmt = std::make_shared<std::string>();
  auto* cmd_compose = app.add_subcommand("compose", "compose two maps (first after second)");
  cmd_compose->add_option("outer", (*compose_args)[0], "map applied last")->required();
  cmd_compose->add_option("inner", (*compose_args)[1], "map applied first")->required();
  add_format(cmd_compose, *compose_fmt);
  cmd_compose->callback([=] {
    auto f = parse_map((*compose_args)[0]);
    auto g = parse_map((*compose_args)[1]);
    emit_map(*compose_fmt, compose(f, g));
  });

  // verify
  auto verify_arg = std::make_shared<std::string>();
  auto verify_fmt = std::make_shared<std::string>();
  auto* cmd_verify = app.add_subcommand("verify", "certify that a map is an automorphism");
  cmd_verify->add_option("map", *verify_arg, "polynomial map")->required();
  add_format(cmd_verify, *verify_fmt);
  cmd_verify->callback([=] {
    auto f = parse_map(*verify_arg);
    int bound = inverse_degree_bound(std::max(map_degree(f), 1), f.nvars());
    if (bound > degree_budget())
      throw std::domain_error(
          "inverse degree bound exceeds the degree budget; raise POLYAUT_DEGREE_BUDGET");
    emit_automorphism(*verify_fmt, verify_automorphism(f));
  });

  // invert
  auto invert_arg = std::make_shared<std::string>();
  auto invert_fmt = std::make_shared<std::string>();
  auto* cmd_invert = app.add_subcommand("invert", "compute the certified inverse of a map");
  cmd_invert->add_option("map", *invert_arg, "polynomial map")->required();
  add_format(cmd_invert, *invert_fmt);
  cmd_invert->callback([=] {
    auto f = parse_map(*invert_arg);
    int bound = inverse_degree_bound(std::max(map_degree(f), 1), f.nvars());
    if (bound > degree_budget())
      throw std::domain_error(
          "inverse degree bound exceeds the degree budget; raise POLYAUT_DEGREE_BUDGET");
    auto aut = verify_automorphism(f);
    if (record_mode(*invert_fmt)) {
      emit_automorphism(*invert_fmt, aut);
    } else {
      std::cout << to_string(aut.inverse()) << "\n";
    }
  });

  // exp
  auto exp_args = std::make_shared<std::vector<std::string>>(2);
  auto exp_fmt = std::make_shared<std::string>();
  auto* cmd_exp = app.add_subcommand("exp", "flow of a nilpotent derivation for a given time");
  cmd_exp->add_option("derivation", (*exp_args)[0], "derivation, e.g. \"[x2; 0] d/dx\"")
      ->required();
  cmd_exp->add_option("time", (*exp_args)[1], "flow time (exact scalar)")->required();
  add_format(cmd_exp, *exp_fmt);
  cmd_exp->callback([=] {
    auto delta = parse_derivation((*exp_args)[0]);
    auto s = parse_scalar((*exp_args)[1]);
    emit_automorphism(*exp_fmt, flow(delta, s, degree_budget()));
  });

  // lnd-check
  auto lnd_arg = std::make_shared<std::string>();
  auto lnd_fmt = std::make_shared<std::string>();
  auto* cmd_lnd = app.add_subcommand("lnd-check", "certify nilpotency of a derivation");
  cmd_lnd->add_option("derivation", *lnd_arg, "derivation")->required();
  add_format(cmd_lnd, *lnd_fmt);
  cmd_lnd->callback([=] {
    auto delta = parse_derivation(*lnd_arg);
    auto cert = certify_nilpotent(delta, degree_budget());
    if (!cert.certified)
      throw std::domain_error("derivation not certified nilpotent within the degree budget");
    if (record_mode(*lnd_fmt)) {
      std::cout << "verdict: nilpotent\n";
      std::cout << "orders:";
      for (int k : cert.orders) std::cout << " " << k;
      std::cout << "\n";
    } else {
      std::cout << "nilpotent; coordinate chain lengths:";
      for (int k : cert.orders) std::cout << " " << k;
      std::cout << "\n";
    }
  });

  // classify
  auto classify_arg = std::make_shared<std::string>();
  auto classify_fmt = std::make_shared<std::string>();
  auto* cmd_classify =
      app.add_subcommand("classify", "normal form of a single-monomial derivation");
  cmd_classify->add_option("derivation", *classify_arg, "derivation")->required();
  add_format(cmd_classify, *classify_fmt);
  cmd_classify->callback([=] {
    auto delta = parse_derivation(*classify_arg);
    auto form = classify_Dn_normalized(delta);
    if (!form) throw std::domain_error("derivation is not a normalized single monomial");
    Character gamma_char(std::vector<int>(form->gamma.begin(), form->gamma.end()));
    if (record_mode(*classify_fmt)) {
      std::cout << "axis: " << form->axis + 1 << "\n";
      std::cout << "gamma: " << to_string(gamma_char) << "\n";
      std::cout << "coefficient: " << to_string(form->coefficient) << "\n";
      std::cout << "character: " << to_string(form->character()) << "\n";
      std::cout << "verdict: normalized\n";
    } else {
      std::cout << "c * x^gamma d/dx" << form->axis + 1 << " with c = "
                << to_string(form->coefficient) << ", gamma = " << to_string(gamma_char)
                << ", character " << to_string(form->character()) << "\n";
    }
  });

  // conj
  auto conj_args = std::make_shared<std::vector<std::string>>(2);
  auto conj_fmt = std::make_shared<std::string>();
  auto* cmd_conj = app.add_subcommand("conj", "conjugate a derivation by a diagonal element");
  cmd_conj->add_option("derivation", (*conj_args)[0], "derivation")->required();
  cmd_conj->add_option("diagonal", (*conj_args)[1], "diagonal entries, e.g. \"(2, -1/3)\"")
      ->required();
  add_format(cmd_conj, *conj_fmt);
  cmd_conj->callback([=] {
    auto delta = parse_derivation((*conj_args)[0]);
    DiagonalElement d(parse_scalar_tuple((*conj_args)[1]));
    auto moved = conj_by_diagonal(d, delta);
    std::cout << to_string(moved) << "\n";
  });

  // theta
  auto theta_arg = std::make_shared<std::string>();
  auto theta_inner = std::make_shared<std::string>();
  auto theta_tau = std::make_shared<std::string>();
  auto theta_fmt = std::make_shared<std::string>();
  auto* cmd_theta =
      app.add_subcommand("theta", "twisted conjugation: tau(g . f . g^-1)");
  cmd_theta->add_option("map", *theta_arg, "map to transform")->required();
  cmd_theta->add_option("--inner", *theta_inner, "word giving the conjugating automorphism g")
      ->default_val("id");
  cmd_theta->add_option("--tau", *theta_tau, "coefficient twist")
      ->check(CLI::IsMember({"id", "conj"}))
      ->default_val("id");
  add_format(cmd_theta, *theta_fmt);
  cmd_theta->callback([=] {
    auto f = parse_map(*theta_arg);
    auto word = parse_word(*theta_inner, f.nvars());
    ThetaAut theta{eval_word(word),
                   *theta_tau == "conj" ? FieldAut::conjugation : FieldAut::identity};
    emit_map(*theta_fmt, theta_apply(theta, f));
  });

  // jvk
  auto jvk_arg = std::make_shared<std::string>();
  auto jvk_fmt = std::make_shared<std::string>();
  auto* cmd_jvk =
      app.add_subcommand("jvk", "factor a plane automorphism into affine and elementary maps");
  cmd_jvk->add_option("map", *jvk_arg, "plane polynomial map")->required();
  add_format(cmd_jvk, *jvk_fmt);
  cmd_jvk->callback([=] {
    auto f = parse_map(*jvk_arg);
    if (f.nvars() != 2) throw std::invalid_argument("factorization needs a plane map");
    auto aut = verify_automorphism(f);
    std::vector<int> log;
    auto word = jvk_factor(aut, &log);
    if (record_mode(*jvk_fmt)) {
      std::cout << "word: " << to_string(word) << "\n";
      std::cout << "length: " << word.size() << "\n";
      std::cout << "degrees:";
      for (int d : log) std::cout << " " << d;
      std::cout << "\n";
      std::cout << "verdict: factored\n";
    } else {
      std::cout << to_string(word) << "\n";
    }
  });

  // word-eval
  auto word_arg = std::make_shared<std::string>();
  auto word_nvars = std::make_shared<int>(0);
  auto word_fmt = std::make_shared<std::string>();
  auto* cmd_word = app.add_subcommand("word-eval", "evaluate a word of tame generators");
  cmd_word->add_option("word", *word_arg, "word, e.g. \"[E1{x2^2}; A[[0,1],[1,0]]]\"")
      ->required();
  cmd_word->add_option("--nvars", *word_nvars, "number of variables (inferred when omitted)");
  add_format(cmd_word, *word_fmt);
  cmd_word->callback([=] {
    auto word = parse_word(*word_arg, *word_nvars > 0 ? *word_nvars : -1);
    auto f = eval_word(word);
    int bound = inverse_degree_bound(std::max(f.degree(), 1), f.nvars());
    if (bound <= degree_budget() &&
        formal_inverse(f.forward(), bound) != f.inverse())
      throw std::logic_error("word inverse disagrees with the power-series inverse");
    emit_automorphism(*word_fmt, f);
  });

  // centralizer
  auto cent_n = std::make_shared<int>(2);
  auto cent_k = std::make_shared<int>(2);
  auto cent_d = std::make_shared<int>(2);
  auto cent_samples = std::make_shared<int>(200);
  auto cent_seed = std::make_shared<std::uint64_t>(1);
  auto cent_fmt = std::make_shared<std::string>();
  auto* cmd_cent = app.add_subcommand(
      "centralizer", "test whether degree-bounded centralizer candidates stay diagonal");
  cmd_cent->add_option("n", *cent_n, "number of variables")->required();
  cmd_cent->add_option("k", *cent_k, "torsion order of the diagonal group")->required();
  cmd_cent->add_option("d", *cent_d, "degree bound for candidates")->required();
  cmd_cent->add_option("--samples", *cent_samples, "number of sampled candidates");
  cmd_cent->add_option("--seed", *cent_seed, "random seed");
  add_format(cmd_cent, *cent_fmt);
  cmd_cent->callback([=] {
    auto mu = FiniteDiagonalGroup::full_rank(*cent_n, *cent_k);
    auto report = centralizer_equals_Dn(mu, *cent_d, *cent_samples, *cent_seed);
    std::cout << "seed: " << *cent_seed << "\n";
    if (record_mode(*cent_fmt)) {
      std::cout << "forced: " << (report.forced ? "yes" : "no") << "\n";
      std::cout << "samples: " << report.samples << "\n";
      std::cout << "certified: " << report.certified << "\n";
      std::cout << "verdict: "
                << (report.forced
                        ? "forced-diagonal"
                        : (report.all_certified_diagonal ? "diagonal" : "counterexample"))
                << "\n";
    } else if (report.forced) {
      std::cout << "support forces diagonal linear maps; no sampling needed\n";
    } else {
      std::cout << "certified " << report.certified << " of " << report.samples
                << " sampled candidates\n";
      std::cout << (report.all_certified_diagonal
                        ? "every certified candidate is diagonal linear\n"
                        : "found a certified non-diagonal candidate\n");
    }
    if (report.counterexample) {
      std::cout << "counterexample: " << to_string(*report.counterexample) << "\n";
      g_exit = 1;
    }
  });

  // xu-enum
  auto xu_n = std::make_shared<int>(2);
  auto xu_bound = std::make_shared<int>(2);
  auto* cmd_xu = app.add_subcommand(
      "xu-enum", "enumerate admissible characters with entries bounded below by -bound");
  cmd_xu->add_option("n", *xu_n, "number of variables")->required();
  cmd_xu->add_option("bound", *xu_bound, "largest allowed magnitude of negative entries")
      ->required();
  cmd_xu->callback([=] {
    for (const auto& chi : enumerate_Xu(*xu_n, *xu_bound))
      std::cout << to_string(chi) << "\n";
  });

  // dominance
  auto dom_args = std::make_shared<std::vector<std::string>>(2);
  auto* cmd_dom = app.add_subcommand("dominance", "compare two characters in dominance order");
  cmd_dom->add_option("first", (*dom_args)[0], "character, e.g. \"(1,-1)\"")->required();
  cmd_dom->add_option("second", (*dom_args)[1], "character")->required();
  cmd_dom->callback([=] {
    auto a = parse_character((*dom_args)[0]);
    auto b = parse_character((*dom_args)[1]);
    bool ab = dominance_leq(a, b);
    bool ba = dominance_leq(b, a);
    if (ab && ba)
      std::cout << "equal\n";
    else if (ab)
      std::cout << "first-below-second\n";
    else if (ba)
      std::cout << "second-below-first\n";
    else
      std::cout << "incomparable\n";
  });

  // translation-witness
  auto wit_arg = std::make_shared<std::string>();
  auto* cmd_wit = app.add_subcommand(
      "translation-witness", "strictly dominated non-admissible witness of a dominant character");
  cmd_wit->add_option("character", *wit_arg, "dominant admissible character")->required();
  cmd_wit->callback([=] {
    std::cout << to_string(translation_lemma_witness(parse_character(*wit_arg))) << "\n";
  });

  // locally-finite
  auto lf_arg = std::make_shared<std::string>();
  auto lf_iter = std::make_shared<int>(8);
  auto lf_cap = std::make_shared<int>(16);
  auto lf_fmt = std::make_shared<std::string>();
  auto* cmd_lf =
      app.add_subcommand("locally-finite", "decide finiteness of the coordinate orbit span");
  cmd_lf->add_option("map", *lf_arg, "polynomial map")->required();
  cmd_lf->add_option("--max-iter", *lf_iter, "iterations to examine in each direction");
  cmd_lf->add_option("--rank-cap", *lf_cap, "span dimension ceiling");
  add_format(cmd_lf, *lf_fmt);
  cmd_lf->callback([=] {
    auto f = verify_automorphism(parse_map(*lf_arg));
    auto report = locally_finite_certify(f, *lf_iter, *lf_cap);
    const char* verdict = report.verdict == LocalFiniteness::certified
                              ? "certified"
                              : (report.verdict == LocalFiniteness::not_locally_finite
                                     ? "not-locally-finite"
                                     : "inconclusive");
    if (record_mode(*lf_fmt)) {
      std::cout << "verdict: " << verdict << "\n";
      std::cout << "dimension: " << report.dimension << "\n";
      std::cout << "iterations: " << report.iterations << "\n";
      std::cout << "distinct_degrees: " << report.distinct_degrees << "\n";
      std::cout << "note: " << report.note << "\n";
    } else {
      std::cout << verdict;
      if (report.verdict == LocalFiniteness::certified)
        std::cout << " (span dimension " << report.dimension << ")";
      std::cout << "; " << report.note << "\n";
    }
    if (report.verdict == LocalFiniteness::inconclusive) g_exit = 1;
  });

  // lemma-suite
  auto suite_seed = std::make_shared<std::uint64_t>(20260816);
  auto suite_trials = std::make_shared<int>(25);
  auto suite_inject = std::make_shared<bool>(false);
  auto* cmd_suite = app.add_subcommand("lemma-suite", "run the library's named self-checks");
  cmd_suite->add_option("--seed", *suite_seed, "random seed");
  cmd_suite->add_option("--trials", *suite_trials, "trials per randomized check");
  cmd_suite->add_flag("--inject-failure", *suite_inject,
                      "corrupt one check to prove failures are detected");
  cmd_suite->callback([=] {
    SuiteConfig config;
    config.seed = *suite_seed;
    config.trials = *suite_trials;
    config.inject_failure = *suite_inject;
    config.degree_budget = degree_budget();
    std::cout << "seed: " << config.seed << "\n";
    auto results = run_lemma_suite(config);
    for (const auto& r : results)
      std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.name
                << (r.pass ? "" : ": " + r.detail) << "\n";
    if (!all_passed(results)) g_exit = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const polyaut::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
