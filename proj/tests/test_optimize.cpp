#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "secretary/optimize.hpp"

using namespace secretary;

TEST_CASE("finite scan, worked examples") {
  const FiniteOptimum incl = best_cutoff_finite(ProblemSize(2, 2), StrategyKind::Inclusive);
  CHECK(incl.cutoff_m == 1);  // M = 1 and M = 2 tie at 5/6; the smaller M wins
  CHECK(incl.value.rational() == Rational(5, 6));

  const FiniteOptimum strict = best_cutoff_finite(ProblemSize(2, 2), StrategyKind::Strict);
  CHECK(strict.cutoff_m == 0);
  CHECK(strict.value.rational() == Rational(1, 2));

  const FiniteOptimum trivial = best_cutoff_finite(ProblemSize(1, 4), StrategyKind::Inclusive);
  CHECK(trivial.cutoff_m == 0);
  CHECK(trivial.value.rational() == Rational(1));
}

TEST_CASE("the scanned optimum dominates every cutoff") {
  for (long long n = 1; n <= 5; ++n) {
    for (long long k = 1; n * k <= 10; ++k) {
      const ProblemSize size(n, k);
      for (StrategyKind kind : {StrategyKind::Inclusive, StrategyKind::Strict}) {
        const FiniteOptimum best = best_cutoff_finite(size, kind);
        for (long long m = 0; m <= n * k - 1; ++m) {
          const Probability p = kind == StrategyKind::Inclusive
                                    ? win_probability_inclusive(size, m)
                                    : win_probability_strict(size, m);
          CHECK(best.value.rational() >= p.rational());
        }
      }
    }
  }
}

TEST_CASE("asymptotic search reproduces the k = 2 optimum") {
  const AsymptoticOptimum best = best_c_asymptotic(2, StrategyKind::Inclusive);
  CHECK(std::fabs(best.c_star - 0.386) <= 0.002);
  CHECK(std::fabs(best.value - 0.701) <= 0.001);
  CHECK(best.method == SearchMethod::GridRefine);
  CHECK(best.tolerance == 1e-7);
  // the refined point must not lose to nearby grid values
  CHECK(best.value >= limit_inclusive(LimitQuery(2, best.c_star - 1e-3)));
  CHECK(best.value >= limit_inclusive(LimitQuery(2, best.c_star + 1e-3)));
}

TEST_CASE("strict optimum sits at 1/e for every k") {
  const double inv_e = 1.0 / std::numbers::e;
  for (long long k : {1LL, 2LL, 3LL, 7LL, 12LL, 25LL}) {
    const AsymptoticOptimum best = best_c_asymptotic(k, StrategyKind::Strict);
    CHECK(std::fabs(best.value - inv_e) <= 1e-8);
    const double expected_c = 1.0 - std::pow(1.0 - inv_e, 1.0 / static_cast<double>(k));
    CHECK(std::fabs(best.c_star - expected_c) <= 1e-5);
  }
}

TEST_CASE("inclusive quality is nondecreasing in k") {
  double previous = 0.0;
  for (long long k = 1; k <= 25; ++k) {
    const AsymptoticOptimum best = best_c_asymptotic(k, StrategyKind::Inclusive);
    CHECK(best.value >= previous);
    previous = best.value;
  }
}

TEST_CASE("table rows are rounded and ordered as requested") {
  const std::vector<long long> ks{2, 3, 4};
  const auto rows = table_optimal(ks, StrategyKind::Inclusive);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].k == 2);
  CHECK(rows[0].c_star == 0.386);
  CHECK(rows[0].p_star == 0.701);
  CHECK(rows[1].k == 3);
  CHECK(rows[1].c_star == 0.413);
  CHECK(rows[1].p_star == 0.854);
  CHECK(rows[2].k == 4);
  CHECK(rows[2].c_star == 0.431);
  CHECK(rows[2].p_star == 0.928);

  const std::vector<long long> classical{1};
  const auto strict_rows = table_optimal(classical, StrategyKind::Strict);
  REQUIRE(strict_rows.size() == 1);
  CHECK(strict_rows[0].c_star == 0.368);
  CHECK(strict_rows[0].p_star == 0.368);
}

TEST_CASE("rounding is half-to-even at the third decimal") {
  CHECK(round_3_decimals(0.0625) == 0.062);   // 62.5 rounds to the even 62
  CHECK(round_3_decimals(0.1875) == 0.188);   // 187.5 rounds to the even 188
  CHECK(round_3_decimals(0.7009) == 0.701);
  CHECK(round_3_decimals(0.9999) == 1.0);
  CHECK(round_3_decimals(0.46859) == 0.469);
}
