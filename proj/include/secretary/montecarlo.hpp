#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "secretary/finite.hpp"

namespace secretary {

/// xoshiro256++ (Blackman & Vigna), state expanded from a (seed, stream) pair
/// with splitmix64. Streams are independent of one another, so parallel
/// consumers can each own one without any sequential handoff; all output is
/// platform-independent.
class SplitRng {
 public:
  SplitRng(std::uint64_t seed, std::uint64_t stream);

  std::uint64_t next();

  /// Uniform draw from [0, bound) without modulo bias (Lemire rejection).
  std::uint64_t below(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 4> state_;
};

struct SimulationConfig {
  std::uint64_t trials;
  std::uint64_t seed;
  std::uint32_t chunk_size = 1u << 14;
};

struct SimulationReport {
  double estimate = 0.0;   // wins / trials
  double std_error = 0.0;  // sqrt(estimate * (1 - estimate) / trials)
  std::uint64_t trials = 0;
  std::uint64_t wins = 0;
};

enum class Outcome { Won, Lost };

/// Uniformly random arrangement of {1^k,...,n^k} (Fisher-Yates over the
/// kn-length rank sequence).
std::vector<int> sample_arrangement(const ProblemSize& size, SplitRng& rng);

/// Plays the strategy on one arrangement. The sequence length must equal kn.
Outcome run_strategy(std::span<const int> ranks, const Strategy& strategy,
                     const ProblemSize& size);

/// Runs config.trials independent plays and reports the win fraction.
/// Trials are processed in chunks of config.chunk_size; chunk i draws from
/// the RNG stream keyed by (config.seed, i), so the outcome is a pure
/// function of (trials, seed, chunk_size) no matter how many workers run.
/// workers = 0 picks the hardware concurrency.
SimulationReport estimate(const ProblemSize& size, const Strategy& strategy,
                          const SimulationConfig& config, unsigned workers = 0);

}  // namespace secretary
