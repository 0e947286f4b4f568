#include "secretary/finite.hpp"

#include <algorithm>
#include <cmath>

namespace secretary {

namespace {

void check_cutoff(const ProblemSize& size, long long M) {
  if (M < 0 || M > size.item_count() - 1)
    throw std::domain_error("win_probability: cutoff outside [0, kn-1]");
}

EvalMode resolve(const ProblemSize& size, EvalMode mode) {
  if (mode != EvalMode::Auto) return mode;
  return size.item_count() <= kMaxExactItems ? EvalMode::Exact : EvalMode::Float;
}

// Shared shape of both formulas: `leading` times the sum over j in [1, n-1]
// and l in [1, k] of C(M,l)(k)_l (k(j-1))_{M-l} / ((kn)_M * weight(j,l)),
// plus an optional j = n boundary sum over l in [1, k-1].
template <typename WeightFn>
Rational exact_formula(const ProblemSize& size, long long M, bool with_boundary_sum,
                       long long leading, WeightFn&& weight) {
  const long long k = size.k;
  const long long n = size.n;
  const BigInt denom = falling_factorial(size.item_count(), M).integer();

  Rational total(0);
  if (with_boundary_sum) {
    BigInt first = 0;
    for (long long l = 1; l <= k - 1 && l <= M; ++l) {
      first += binomial(M, l).integer() * falling_factorial(k, l).integer() *
               falling_factorial(k * (n - 1), M - l).integer();
    }
    total += Rational(std::move(first), denom);
  }
  for (long long j = 1; j <= n - 1; ++j) {
    for (long long l = 1; l <= k && l <= M; ++l) {
      if (M - l > k * (j - 1)) continue;
      BigInt num = binomial(M, l).integer() * falling_factorial(k, l).integer() *
                   falling_factorial(k * (j - 1), M - l).integer();
      total += Rational(num * leading, denom * weight(j, l));
    }
  }
  return total;
}

template <typename WeightFn>
double float_formula(const ProblemSize& size, long long M, bool with_boundary_sum,
                     long long leading, WeightFn&& weight) {
  const long long k = size.k;
  const long long n = size.n;
  const double ln_denom = log_falling_factorial(size.item_count(), M);

  double total = 0.0;
  if (with_boundary_sum) {
    for (long long l = 1; l <= k - 1 && l <= M; ++l) {
      const double t = log_binomial(M, l) + log_falling_factorial(k, l) +
                       log_falling_factorial(k * (n - 1), M - l) - ln_denom;
      if (std::isfinite(t)) total += std::exp(t);
    }
  }
  double inner = 0.0;
  for (long long j = 1; j <= n - 1; ++j) {
    for (long long l = 1; l <= k && l <= M; ++l) {
      if (M - l > k * (j - 1)) continue;
      const double t = log_binomial(M, l) + log_falling_factorial(k, l) +
                       log_falling_factorial(k * (j - 1), M - l) - ln_denom;
      if (std::isfinite(t))
        inner += std::exp(t) / static_cast<double>(weight(j, l));
    }
  }
  return total + static_cast<double>(leading) * inner;
}

}  // namespace

Probability win_probability_inclusive(const ProblemSize& size, long long M,
                                      EvalMode mode) {
  check_cutoff(size, M);
  mode = resolve(size, mode);
  if (M == 0) {
    // cutoff 0 selects the very first item; it is top-ranked w.p. k/(kn)
    return mode == EvalMode::Exact ? Probability::exact(Rational(1, size.n))
                                   : Probability::approx(1.0 / static_cast<double>(size.n));
  }
  const long long k = size.k;
  const long long n = size.n;
  // after the cutoff, k(n-j+1)-l candidates remain at rank >= j, k of them top;
  // the (j,l) cell is therefore weighted by k / (k(n-j+1)-l)
  auto weight = [&](long long j, long long l) { return k * (n - j + 1) - l; };
  if (mode == EvalMode::Exact)
    return Probability::exact(exact_formula(size, M, /*with_boundary_sum=*/true,
                                            /*leading=*/k, weight));
  return Probability::approx(float_formula(size, M, true, k, weight));
}

Probability win_probability_strict(const ProblemSize& size, long long M,
                                   EvalMode mode) {
  check_cutoff(size, M);
  mode = resolve(size, mode);
  if (M == 0) {
    return mode == EvalMode::Exact ? Probability::exact(Rational(1, size.n))
                                   : Probability::approx(1.0 / static_cast<double>(size.n));
  }
  auto weight = [&](long long j, long long) { return size.n - j; };
  if (mode == EvalMode::Exact)
    return Probability::exact(exact_formula(size, M, false, /*leading=*/1, weight));
  return Probability::approx(float_formula(size, M, false, 1, weight));
}

bool strategy_wins(std::span<const int> ranks, const Strategy& strategy,
                   long long top_rank) {
  const long long len = static_cast<long long>(ranks.size());
  if (strategy.cutoff_m < 0 || strategy.cutoff_m >= len)
    throw std::domain_error("strategy_wins: cutoff outside [0, len-1]");
  int prefix_max = 0;  // ranks are >= 1, so 0 stands for the empty prefix
  for (long long i = 0; i < strategy.cutoff_m; ++i)
    prefix_max = std::max(prefix_max, ranks[i]);
  for (long long i = strategy.cutoff_m; i < len; ++i) {
    const bool selected = strategy.kind == StrategyKind::Inclusive
                              ? ranks[i] >= prefix_max
                              : ranks[i] > prefix_max;
    if (selected) return ranks[i] == top_rank;
  }
  return false;  // nothing selected counts as a loss
}

namespace {

std::vector<int> sorted_multiset(const ProblemSize& size) {
  std::vector<int> ranks;
  ranks.reserve(static_cast<std::size_t>(size.item_count()));
  for (long long r = 1; r <= size.n; ++r)
    ranks.insert(ranks.end(), static_cast<std::size_t>(size.k), static_cast<int>(r));
  return ranks;
}

void check_enumerable(const ProblemSize& size) {
  if (size.item_count() > kMaxBruteForceItems)
    throw std::length_error("brute force: kn exceeds the enumeration bound");
}

}  // namespace

Probability brute_force_win_probability(const ProblemSize& size,
                                        const Strategy& strategy) {
  check_enumerable(size);
  if (strategy.cutoff_m < 0 || strategy.cutoff_m > size.item_count() - 1)
    throw std::domain_error("brute force: cutoff outside [0, kn-1]");
  std::vector<int> ranks = sorted_multiset(size);
  unsigned long long wins = 0;
  unsigned long long total = 0;
  do {
    ++total;
    wins += strategy_wins(ranks, strategy, size.n) ? 1u : 0u;
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return Probability::exact(Rational(BigInt(wins), BigInt(total)));
}

BruteForceTable brute_force_win_table(const ProblemSize& size) {
  check_enumerable(size);
  const long long kn = size.item_count();
  BruteForceTable table;
  table.wins_inclusive.assign(static_cast<std::size_t>(kn), 0);
  table.wins_strict.assign(static_cast<std::size_t>(kn), 0);

  std::vector<int> ranks = sorted_multiset(size);
  std::vector<int> prefix_max(static_cast<std::size_t>(kn) + 1, 0);
  const int top = static_cast<int>(size.n);
  do {
    ++table.arrangements;
    for (long long i = 0; i < kn; ++i)
      prefix_max[i + 1] = std::max(prefix_max[i], ranks[i]);
    for (long long m = 0; m < kn; ++m) {
      const int bar = prefix_max[m];
      for (long long i = m; i < kn; ++i) {
        if (ranks[i] >= bar) {  // inclusive selection
          table.wins_inclusive[m] += (ranks[i] == top) ? 1u : 0u;
          break;
        }
      }
      for (long long i = m; i < kn; ++i) {
        if (ranks[i] > bar) {  // strict selection
          table.wins_strict[m] += (ranks[i] == top) ? 1u : 0u;
          break;
        }
      }
    }
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return table;
}

}  // namespace secretary
