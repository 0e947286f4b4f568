#pragma once

#include <span>
#include <vector>

#include "secretary/asymptotic.hpp"
#include "secretary/finite.hpp"

namespace secretary {

enum class SearchMethod { ExhaustiveScan, GridRefine };

/// Best cutoff at finite n: the smallest M maximizing the win probability,
/// together with that probability.
struct FiniteOptimum {
  long long cutoff_m = 0;
  Probability value = Probability::exact(Rational(0));
  SearchMethod method = SearchMethod::ExhaustiveScan;
  double tolerance = 0.0;  // the scan is exact
};

/// Best asymptotic fraction c in (0,1) together with the limiting probability.
struct AsymptoticOptimum {
  double c_star = 0.0;
  double value = 0.0;
  SearchMethod method = SearchMethod::GridRefine;
  double tolerance = 0.0;  // argument tolerance of the refinement
};

/// Evaluates the exact win probability at every cutoff M in [0, kn-1] and
/// returns the smallest maximizer (ties break toward the earlier commitment).
FiniteOptimum best_cutoff_finite(const ProblemSize& size, StrategyKind kind,
                                 EvalMode mode = EvalMode::Auto);

/// Maximizes the limiting win probability over c in (0,1): a coarse grid of
/// step 1e-3 on [1e-6, 1-1e-6] followed by golden-section refinement between
/// the best grid point's neighbors, down to an argument tolerance of 1e-7.
AsymptoticOptimum best_c_asymptotic(long long k, StrategyKind kind);

/// One row of the optimal-threshold table, rounded half-to-even at 3 decimals.
struct TableRow {
  long long k = 0;
  double c_star = 0.0;
  double p_star = 0.0;
};

std::vector<TableRow> table_optimal(std::span<const long long> k_values,
                                    StrategyKind kind);

/// Round half to even at 3 decimal places.
double round_3_decimals(double x);

}  // namespace secretary
