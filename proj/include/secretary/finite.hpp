#pragma once

#include <span>
#include <vector>

#include "secretary/combinatorics.hpp"
#include "secretary/probability.hpp"

namespace secretary {

/// The two threshold families. After letting the first M items pass,
/// Inclusive accepts the first item ranked at least as high as the best of
/// those M; Strict accepts the first item ranked strictly higher.
enum class StrategyKind { Inclusive, Strict };

struct Strategy {
  StrategyKind kind;
  long long cutoff_m;
};

/// Plays a threshold strategy on a full arrangement and reports whether the
/// selected item has the given top rank. With cutoff 0 the first item is
/// selected. Returns false when no item is ever selected.
bool strategy_wins(std::span<const int> ranks, const Strategy& strategy,
                   long long top_rank);

/// Probability of selecting a top-ranked item under the inclusive strategy
/// with cutoff M on the multiset {1^k,...,n^k}:
///
///   P = sum_{l=1}^{k-1} C(M,l)(k)_l (k(n-1))_{M-l} / (kn)_M
///     + k sum_{j=1}^{n-1} sum_{l=1}^{k} C(M,l)(k)_l (k(j-1))_{M-l} / (kn)_M
///         * 1/(k(n-j+1)-l)
///
/// for M >= 1; the cutoff-0 strategy selects the first item, so M = 0 gives
/// 1/n. Requires 0 <= M <= kn-1.
Probability win_probability_inclusive(const ProblemSize& size, long long M,
                                      EvalMode mode = EvalMode::Auto);

/// Same under the strict strategy:
///
///   P = sum_{j=1}^{n-1} sum_{l=1}^{k} C(M,l)(k)_l (k(j-1))_{M-l} / (kn)_M
///         * 1/(n-j)
///
/// for M >= 1, and 1/n at M = 0.
Probability win_probability_strict(const ProblemSize& size, long long M,
                                   EvalMode mode = EvalMode::Auto);

/// Enumeration bound for the brute-force oracle.
inline constexpr long long kMaxBruteForceItems = 12;

/// Exhaustive oracle: enumerates every distinct arrangement of the multiset
/// (lexicographic next-permutation over the sorted sequence), plays the
/// strategy on each, and returns the exact win fraction. Distinct
/// arrangements are equiprobable, so the fraction needs no extra weighting.
/// Requires kn <= kMaxBruteForceItems.
Probability brute_force_win_probability(const ProblemSize& size,
                                        const Strategy& strategy);

/// One enumeration pass scoring every cutoff and both strategy kinds at once.
struct BruteForceTable {
  std::vector<unsigned long long> wins_inclusive;  // indexed by cutoff M
  std::vector<unsigned long long> wins_strict;
  unsigned long long arrangements = 0;
};
BruteForceTable brute_force_win_table(const ProblemSize& size);

}  // namespace secretary
