#include "secretary/combinatorics.hpp"

#include <cmath>

namespace secretary {

namespace {

BigInt exact_falling_factorial(long long b, long long a) {
  if (a > b) return BigInt(0);
  BigInt r = 1;
  for (long long t = 0; t < a; ++t) r *= (b - t);
  return r;
}

BigInt exact_binomial(long long m, long long l) {
  if (l > m) return BigInt(0);
  if (l > m - l) l = m - l;
  BigInt r = 1;
  // a product of i consecutive integers is divisible by i!, so each step is exact
  for (long long i = 1; i <= l; ++i) {
    r *= (m - l + i);
    r /= i;
  }
  return r;
}

}  // namespace

double log_falling_factorial(long long b, long long a) {
  if (b < 0 || a < 0)
    throw std::domain_error("falling_factorial: arguments must be nonnegative");
  if (a > b) return -std::numeric_limits<double>::infinity();
  double s = 0.0;
  for (long long t = 0; t < a; ++t) s += std::log(static_cast<double>(b - t));
  return s;
}

double log_binomial(long long m, long long l) {
  if (m < 0 || l < 0)
    throw std::domain_error("binomial: arguments must be nonnegative");
  if (l > m) return -std::numeric_limits<double>::infinity();
  if (l > m - l) l = m - l;
  double s = 0.0;
  for (long long i = 1; i <= l; ++i)
    s += std::log(static_cast<double>(m - l + i)) - std::log(static_cast<double>(i));
  return s;
}

ExtendedCount falling_factorial(long long b, long long a, CountMode mode) {
  if (b < 0 || a < 0)
    throw std::domain_error("falling_factorial: arguments must be nonnegative");
  if (mode == CountMode::Exact)
    return ExtendedCount::from_integer(exact_falling_factorial(b, a));
  return ExtendedCount::from_log(log_falling_factorial(b, a));
}

ExtendedCount binomial(long long m, long long l, CountMode mode) {
  if (m < 0 || l < 0)
    throw std::domain_error("binomial: arguments must be nonnegative");
  if (mode == CountMode::Exact)
    return ExtendedCount::from_integer(exact_binomial(m, l));
  return ExtendedCount::from_log(log_binomial(m, l));
}

Probability prefix_event_probability(const ProblemSize& size, long long M,
                                     long long j, long long l, EvalMode mode) {
  const long long kn = size.item_count();
  if (M < 1 || M > kn - 1)
    throw std::domain_error("prefix_event_probability: M outside [1, kn-1]");
  if (j < 1 || j > size.n)
    throw std::domain_error("prefix_event_probability: j outside [1, n]");
  if (l < 1 || l > size.k)
    throw std::domain_error("prefix_event_probability: l outside [1, k]");

  if (mode == EvalMode::Auto)
    mode = kn <= kMaxExactItems ? EvalMode::Exact : EvalMode::Float;

  if (l > M || M - l > size.k * (j - 1)) {
    return mode == EvalMode::Exact ? Probability::exact(Rational(0))
                                   : Probability::approx(0.0);
  }

  if (mode == EvalMode::Exact) {
    BigInt num = binomial(M, l).integer() *
                 falling_factorial(size.k, l).integer() *
                 falling_factorial(size.k * (j - 1), M - l).integer();
    return Probability::exact(Rational(std::move(num),
                                       falling_factorial(kn, M).integer()));
  }

  const double t = log_binomial(M, l) + log_falling_factorial(size.k, l) +
                   log_falling_factorial(size.k * (j - 1), M - l) -
                   log_falling_factorial(kn, M);
  return Probability::approx(std::isfinite(t) ? std::exp(t) : 0.0);
}

}  // namespace secretary
