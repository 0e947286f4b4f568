#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>

#include "secretary/probability.hpp"
#include "secretary/rational.hpp"

namespace secretary {

/// A problem instance: n distinguishable ranks with k items at each rank,
/// i.e. the multiset {1^k, ..., n^k} of k*n items revealed in uniformly
/// random order. Rank n is the highest.
struct ProblemSize {
  long long n;
  long long k;

  ProblemSize(long long ranks, long long copies) : n(ranks), k(copies) {
    if (n < 1 || k < 1) throw std::domain_error("ProblemSize: need n >= 1 and k >= 1");
  }

  long long item_count() const { return n * k; }
};

enum class CountMode { Exact, Log };

/// A nonnegative count held either as an exact big integer or as its natural
/// log. Zero is representable in both modes; log mode uses -infinity for it,
/// so zero factors annihilate products exactly.
class ExtendedCount {
 public:
  static ExtendedCount from_integer(BigInt v) {
    if (v < 0) throw std::domain_error("ExtendedCount: negative count");
    ExtendedCount c;
    c.mode_ = CountMode::Exact;
    c.integer_ = std::move(v);
    return c;
  }

  static ExtendedCount from_log(double ln_value) {
    ExtendedCount c;
    c.mode_ = CountMode::Log;
    c.log_ = ln_value;
    return c;
  }

  static ExtendedCount zero(CountMode mode) {
    return mode == CountMode::Exact
               ? from_integer(BigInt(0))
               : from_log(-std::numeric_limits<double>::infinity());
  }

  static ExtendedCount one(CountMode mode) {
    return mode == CountMode::Exact ? from_integer(BigInt(1)) : from_log(0.0);
  }

  CountMode mode() const { return mode_; }

  bool is_zero() const {
    return mode_ == CountMode::Exact ? integer_ == 0 : std::isinf(log_) && log_ < 0;
  }

  const BigInt& integer() const {
    if (mode_ != CountMode::Exact) throw std::logic_error("ExtendedCount: not exact");
    return integer_;
  }

  /// Natural log of the count; -infinity for zero. Log mode only.
  double log_value() const {
    if (mode_ != CountMode::Log) throw std::logic_error("ExtendedCount: not log");
    return log_;
  }

  /// Natural log regardless of mode (-infinity for zero).
  double log_approx() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return mode_ == CountMode::Exact ? log_of_bigint(integer_) : log_;
  }

  ExtendedCount& operator*=(const ExtendedCount& rhs) {
    if (mode_ != rhs.mode_)
      throw std::logic_error("ExtendedCount: mixed-mode product");
    if (mode_ == CountMode::Exact) {
      integer_ *= rhs.integer_;
    } else {
      log_ += rhs.log_;  // -inf + anything stays -inf
    }
    return *this;
  }
  friend ExtendedCount operator*(ExtendedCount a, const ExtendedCount& b) { return a *= b; }

 private:
  ExtendedCount() : mode_(CountMode::Exact), integer_(0), log_(0.0) {}

  CountMode mode_;
  BigInt integer_;
  double log_;
};

/// Falling factorial b(b-1)...(b-a+1). Empty product (a = 0) is 1;
/// the value is 0 whenever a > b.
ExtendedCount falling_factorial(long long b, long long a,
                                CountMode mode = CountMode::Exact);

/// Binomial coefficient; 0 when l > m.
ExtendedCount binomial(long long m, long long l, CountMode mode = CountMode::Exact);

/// ln of the falling factorial, as a sum of logs of the factors.
/// Returns -infinity when a > b.
double log_falling_factorial(long long b, long long a);

/// ln of the binomial coefficient; -infinity when l > m.
double log_binomial(long long m, long long l);

/// Probability that among the first M items of a uniformly random arrangement
/// of {1^k,...,n^k}, rank j appears exactly l times and no higher rank appears:
///
///   P = C(M,l) (k)_l (k(j-1))_{M-l} / (kn)_M
///
/// which is exactly 0 when M - l > k(j-1). Requires 1 <= M <= kn-1,
/// 1 <= j <= n, 1 <= l <= k.
Probability prefix_event_probability(const ProblemSize& size, long long M,
                                     long long j, long long l,
                                     EvalMode mode = EvalMode::Auto);

/// Largest instance (measured by item count k*n) handled in exact rational
/// arithmetic when a caller asks for EvalMode::Auto.
inline constexpr long long kMaxExactItems = 64;

}  // namespace secretary
