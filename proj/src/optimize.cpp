#include "secretary/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace secretary {

namespace {

constexpr double kGridStep = 1e-3;
constexpr double kGridEdge = 1e-6;
constexpr double kRefineTolerance = 1e-7;

// widened series budget: the grid endpoint c = 1e-6 needs ~1.5e7 terms at k = 2
const SeriesEvalPolicy kOptimizerPolicy{1e-14, 60'000'000};

double objective(long long k, StrategyKind kind, double c) {
  const LimitQuery query(k, c);
  return kind == StrategyKind::Inclusive ? limit_inclusive(query, kOptimizerPolicy)
                                         : limit_strict(query);
}

// golden-section maximization on [lo, hi], run down to an argument tolerance
double golden_section_max(const std::function<double(double)>& f, double lo,
                          double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = f(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

FiniteOptimum best_cutoff_finite(const ProblemSize& size, StrategyKind kind,
                                 EvalMode mode) {
  auto win = [&](long long m) {
    return kind == StrategyKind::Inclusive
               ? win_probability_inclusive(size, m, mode)
               : win_probability_strict(size, m, mode);
  };
  FiniteOptimum best;
  best.cutoff_m = 0;
  best.value = win(0);
  for (long long m = 1; m <= size.item_count() - 1; ++m) {
    Probability p = win(m);
    if (p > best.value) {  // strict improvement only, so the smallest M wins ties
      best.value = p;
      best.cutoff_m = m;
    }
  }
  return best;
}

AsymptoticOptimum best_c_asymptotic(long long k, StrategyKind kind) {
  if (k < 1) throw std::domain_error("best_c_asymptotic: k must be >= 1");
  auto f = [&](double c) { return objective(k, kind, c); };

  double best_c = kGridEdge;
  double best_f = f(best_c);
  for (double c = kGridEdge + kGridStep; c < 1.0 - kGridEdge; c += kGridStep) {
    const double v = f(c);
    if (v > best_f) {
      best_f = v;
      best_c = c;
    }
  }
  {
    const double edge = 1.0 - kGridEdge;
    const double v = f(edge);
    if (v > best_f) {
      best_f = v;
      best_c = edge;
    }
  }

  const double lo = std::max(kGridEdge * 1e-3, best_c - kGridStep);
  const double hi = std::min(1.0 - kGridEdge * 1e-3, best_c + kGridStep);
  double refined = golden_section_max(f, lo, hi, kRefineTolerance);
  if (refined < lo || refined > hi)
    throw std::logic_error("best_c_asymptotic: refinement left its bracket");
  double refined_f = f(refined);
  if (refined_f < best_f) {  // refinement must never lose to the coarse grid
    refined = best_c;
    refined_f = best_f;
  }

  AsymptoticOptimum result;
  result.c_star = refined;
  result.value = refined_f;
  result.method = SearchMethod::GridRefine;
  result.tolerance = kRefineTolerance;
  return result;
}

double round_3_decimals(double x) {
  return std::nearbyint(x * 1000.0) / 1000.0;  // half-to-even under FE_TONEAREST
}

std::vector<TableRow> table_optimal(std::span<const long long> k_values,
                                    StrategyKind kind) {
  std::vector<TableRow> rows;
  rows.reserve(k_values.size());
  for (long long k : k_values) {
    const AsymptoticOptimum best = best_c_asymptotic(k, kind);
    rows.push_back(TableRow{k, round_3_decimals(best.c_star),
                            round_3_decimals(best.value)});
  }
  return rows;
}

}  // namespace secretary
