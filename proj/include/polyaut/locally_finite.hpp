#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "polymap.hpp"

namespace polyaut {

enum class LocalFiniteness { certified, not_locally_finite, inconclusive };

struct LocalFinitenessReport {
  LocalFiniteness verdict = LocalFiniteness::inconclusive;
  /// Dimension of the stable span; meaningful when certified.
  int dimension = 0;
  /// Iterations examined in each direction before the verdict.
  int iterations = 0;
  /// Distinct component degrees observed across all iterates.
  int distinct_degrees = 0;
  std::string note;
};

/// Decides whether the coordinate orbit span V = span{(f^m)*(x_i) : |m| <=
/// max_iter} certifies local finiteness.
///
/// CERTIFIED: V has rank <= rank_cap and is stable under both pullbacks, so
/// V already contains every iterate of every coordinate.
///
/// NOT-LOCALLY-FINITE: iterate degrees grew strictly at every step of the
/// forward or the inverse direction AND the number of distinct component
/// degrees exceeds rank_cap. Polynomials of pairwise distinct degrees are
/// independent, so the span provably outgrows rank_cap, and the strict
/// monotone growth rules out the eventually-periodic degree sequences that
/// bounded orbits produce.
///
/// INCONCLUSIVE: rank exceeds rank_cap without monotone growth, or V is not
/// yet stable at this horizon.
template <field_scalar K>
LocalFinitenessReport locally_finite_certify(const Automorphism<K>& f, int max_iter,
                                             int rank_cap) {
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  if (rank_cap < 1) throw std::invalid_argument("rank_cap must be >= 1");
  int n = f.nvars();

  LocalFinitenessReport report;
  std::set<int> degrees;
  std::vector<Polynomial<K>> pool;
  for (int i = 0; i < n; ++i) pool.push_back(Polynomial<K>::variable(n, i));
  degrees.insert(1);

  for (const PolyMap<K>& step : {f.forward(), f.inverse()}) {
    PolyMap<K> iterate = PolyMap<K>::identity(n);
    bool strict_growth = true;
    int prev_degree = 1;
    for (int m = 1; m <= max_iter; ++m) {
      iterate = compose(step, iterate);
      report.iterations = std::max(report.iterations, m);
      int d = map_degree(iterate);
      strict_growth = strict_growth && d > prev_degree;
      prev_degree = d;
      for (const auto& comp : iterate.components()) {
        degrees.insert(comp.degree());
        pool.push_back(comp);
      }
      report.distinct_degrees = static_cast<int>(degrees.size());
      if (strict_growth && report.distinct_degrees > rank_cap) {
        report.verdict = LocalFiniteness::not_locally_finite;
        report.note = "iterate degrees grow strictly and force span dimension past rank_cap";
        return report;
      }
    }
  }

  PolySpan<K> span(n);
  for (const auto& p : pool) span.insert(p);
  report.distinct_degrees = static_cast<int>(degrees.size());
  if (span.rank() > rank_cap) {
    report.verdict = LocalFiniteness::inconclusive;
    report.note = "orbit span rank exceeds rank_cap";
    return report;
  }
  for (const auto& p : pool) {
    if (!span.contains(substitute(p, f.forward().components())) ||
        !span.contains(substitute(p, f.inverse().components()))) {
      report.verdict = LocalFiniteness::inconclusive;
      report.note = "orbit span not stable within max_iter";
      return report;
    }
  }
  report.verdict = LocalFiniteness::certified;
  report.dimension = span.rank();
  report.note = "orbit span stable under both pullbacks";
  return report;
}

}  // namespace polyaut
