#include "secretary/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace secretary {

namespace {

inline std::uint64_t rotl(std::uint64_t x, int r) {
  return (x << r) | (x >> (64 - r));
}

inline std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void fisher_yates(std::span<int> ranks, SplitRng& rng) {
  for (std::size_t i = ranks.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i + 1));
    std::swap(ranks[i], ranks[j]);
  }
}

std::vector<int> multiset_sequence(const ProblemSize& size) {
  std::vector<int> ranks;
  ranks.reserve(static_cast<std::size_t>(size.item_count()));
  for (long long r = 1; r <= size.n; ++r)
    ranks.insert(ranks.end(), static_cast<std::size_t>(size.k), static_cast<int>(r));
  return ranks;
}

}  // namespace

SplitRng::SplitRng(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t key = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  for (auto& word : state_) word = splitmix64(key);
  if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
}

std::uint64_t SplitRng::next() {
  const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

std::uint64_t SplitRng::below(std::uint64_t bound) {
  if (bound == 0) throw std::domain_error("SplitRng::below: bound must be positive");
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

std::vector<int> sample_arrangement(const ProblemSize& size, SplitRng& rng) {
  std::vector<int> ranks = multiset_sequence(size);
  fisher_yates(ranks, rng);
  return ranks;
}

Outcome run_strategy(std::span<const int> ranks, const Strategy& strategy,
                     const ProblemSize& size) {
  if (static_cast<long long>(ranks.size()) != size.item_count())
    throw std::invalid_argument("run_strategy: sequence length differs from kn");
  return strategy_wins(ranks, strategy, size.n) ? Outcome::Won : Outcome::Lost;
}

SimulationReport estimate(const ProblemSize& size, const Strategy& strategy,
                          const SimulationConfig& config, unsigned workers) {
  if (config.trials < 1) throw std::domain_error("estimate: trials must be >= 1");
  if (config.chunk_size < 1) throw std::domain_error("estimate: chunk_size must be >= 1");
  if (strategy.cutoff_m < 0 || strategy.cutoff_m > size.item_count() - 1)
    throw std::domain_error("estimate: cutoff outside [0, kn-1]");

  const std::uint64_t chunks =
      (config.trials + config.chunk_size - 1) / config.chunk_size;
  std::vector<std::uint64_t> chunk_wins(chunks, 0);

  // shuffling any fixed arrangement yields a uniform one, so each chunk keeps
  // reshuffling its own buffer instead of rebuilding it per trial
  auto run_chunk = [&](std::uint64_t chunk) {
    SplitRng rng(config.seed, chunk);
    std::vector<int> ranks = multiset_sequence(size);
    const std::uint64_t begin = chunk * config.chunk_size;
    const std::uint64_t end = std::min<std::uint64_t>(begin + config.chunk_size,
                                                      config.trials);
    std::uint64_t wins = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      fisher_yates(ranks, rng);
      wins += strategy_wins(ranks, strategy, size.n) ? 1u : 0u;
    }
    chunk_wins[chunk] = wins;
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, chunks));

  if (workers <= 1) {
    for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) run_chunk(chunk);
  } else {
    std::atomic<std::uint64_t> next_chunk{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::uint64_t chunk = next_chunk.fetch_add(1); chunk < chunks;
             chunk = next_chunk.fetch_add(1)) {
          run_chunk(chunk);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  SimulationReport report;
  report.trials = config.trials;
  for (std::uint64_t w : chunk_wins) report.wins += w;  // order-independent merge
  report.estimate = static_cast<double>(report.wins) / static_cast<double>(config.trials);
  report.std_error =
      std::sqrt(report.estimate * (1.0 - report.estimate) /
                static_cast<double>(config.trials));
  return report;
}

}  // namespace secretary
