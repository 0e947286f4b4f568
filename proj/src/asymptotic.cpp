#include "secretary/asymptotic.hpp"

#include <cmath>
#include <numbers>

namespace secretary {

namespace {

// exact in double up to k ~ 56; plenty past that before c^l underflows matter
double binom_d(long long k, long long l) {
  if (l > k - l) l = k - l;
  double r = 1.0;
  for (long long i = 1; i <= l; ++i)
    r = r * static_cast<double>(k - l + i) / static_cast<double>(i);
  return r;
}

void check_series_args(long long k, long long l_lo, long long l, long long l_hi,
                       double x) {
  if (k < 1) throw std::domain_error("series: k must be >= 1");
  if (l < l_lo || l > l_hi) throw std::domain_error("series: l out of range");
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("series: x outside [0,1)");
}

}  // namespace

double integral_term(long long k, long long l, double x,
                     const SeriesEvalPolicy& policy) {
  if (k < 2) throw std::domain_error("integral_term: k must be >= 2");
  check_series_args(k, 1, l, k - 1, x);
  if (x == 0.0) return 0.0;

  const double xk = std::pow(x, static_cast<double>(k));
  const double one_minus_xk = -std::expm1(static_cast<double>(k) * std::log(x));
  double xpow = std::pow(x, static_cast<double>(k - l));  // x^(mk+k-l) at m = 0
  double sum = 0.0;
  for (long long m = 0; m < policy.max_terms; ++m) {
    const double expo = static_cast<double>(m) * k + k - l;
    sum += xpow / expo;
    xpow *= xk;
    // ratio of consecutive terms is < x^k, so the tail is geometrically bounded
    if (xpow / ((expo + k) * one_minus_xk) < policy.abs_tol) return sum;
    if ((m & 0xffff) == 0xffff)  // re-anchor the running power now and then
      xpow = std::pow(x, static_cast<double>((m + 1) * k + k - l));
  }
  throw ToleranceNotReached("integral_term: tail bound not met within max_terms");
}

double g_function_series(long long k, long long l, double x,
                         const SeriesEvalPolicy& policy) {
  check_series_args(k, 1, l, k, x);
  if (x == 0.0) return 0.0;

  const double xk = std::pow(x, static_cast<double>(k));
  const double one_minus_xk = -std::expm1(static_cast<double>(k) * std::log(x));
  double xpow = xk * xk;  // x^(k(s+1)) at s = 1
  double sum = 0.0;
  for (long long s = 1; s <= policy.max_terms; ++s) {
    sum += xpow / static_cast<double>(k * (s + 1) - l);
    xpow *= xk;
    if (xpow / (static_cast<double>(k * (s + 2) - l) * one_minus_xk) < policy.abs_tol)
      return sum;
    if ((s & 0xffff) == 0xffff)
      xpow = std::pow(x, static_cast<double>(k * (s + 2)));
  }
  throw ToleranceNotReached("g_function_series: tail bound not met within max_terms");
}

double g_function_closed(long long k, long long l, double x,
                         const SeriesEvalPolicy& policy) {
  check_series_args(k, 1, l, k, x);
  if (x == 0.0) return 0.0;
  const double xk = std::pow(x, static_cast<double>(k));
  if (l == k) return -(xk / static_cast<double>(k)) * std::log1p(-xk);
  return -xk / static_cast<double>(k - l) +
         std::pow(x, static_cast<double>(l)) * integral_term(k, l, x, policy);
}

double g_function(long long k, long long l, double x, const SeriesEvalPolicy& policy) {
  const double series = g_function_series(k, l, x, policy);
  const double closed = g_function_closed(k, l, x, policy);
  if (std::fabs(series - closed) > 10.0 * policy.abs_tol)
    throw std::logic_error("g_function: series and closed form disagree");
  return series;
}

double limit_inclusive(const LimitQuery& query, const SeriesEvalPolicy& policy) {
  const long long k = query.k;
  const double c = query.c;
  const double omc = 1.0 - c;

  // (1-c)^k (c/(1-c))^l is written as c^l (1-c)^(k-l) so neither factor blows
  // up as c approaches either endpoint
  const double omxk = -std::expm1(static_cast<double>(k) * std::log1p(-c));
  double head = 0.0;
  double integrals = 0.0;
  for (long long l = 1; l <= k - 1; ++l) {
    const double weight = binom_d(k, l) * std::pow(c, static_cast<double>(l));
    head += weight * std::pow(omc, static_cast<double>(k - l)) *
            static_cast<double>(l) / static_cast<double>(k - l);
    // the integral is bounded by x^(k-l) / ((k-l)(1-x^k)) with x = 1-c;
    // skip l whose whole contribution falls below the series tolerance
    const double bound = static_cast<double>(k) * weight *
                         std::pow(omc, static_cast<double>(k - l)) /
                         (static_cast<double>(k - l) * omxk);
    if (bound < 0.01 * policy.abs_tol) continue;
    integrals += weight * integral_term(k, l, omc, policy);
  }
  const double log_tail =
      -std::pow(c, static_cast<double>(k)) *
      std::log1p(-std::pow(omc, static_cast<double>(k)));
  return -head + static_cast<double>(k) * integrals + log_tail;
}

double limit_inclusive_series_form(const LimitQuery& query,
                                   const SeriesEvalPolicy& policy) {
  const long long k = query.k;
  const double c = query.c;
  const double omc = 1.0 - c;
  const double ratio = c / omc;

  double g_part = 0.0;
  for (long long l = 1; l <= k; ++l) {
    g_part += binom_d(k, l) * std::pow(ratio, static_cast<double>(l)) *
              g_function(k, l, omc, policy);
  }
  double plain = 0.0;
  for (long long l = 1; l <= k - 1; ++l) {
    plain += binom_d(k, l) * std::pow(c, static_cast<double>(l)) *
             std::pow(omc, static_cast<double>(k - l));
  }
  return static_cast<double>(k) * g_part + plain;
}

double limit_inclusive_closed_k2(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw std::domain_error("limit_inclusive_closed_k2: c outside (0,1)");
  return -2.0 * c * (1.0 - c) + (2.0 * c - c * c) * std::log(2.0 - c) -
         (2.0 * c + c * c) * std::log(c);
}

double limit_inclusive_closed_k3(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw std::domain_error("limit_inclusive_closed_k3: c outside (0,1)");
  const double c2 = c * c;
  const double c3 = c2 * c;
  const double rt3 = std::numbers::sqrt3;
  return -1.5 * (1.0 - c) * c * (1.0 + 3.0 * c) -
         (3.0 * c + 3.0 * c2 + c3) * std::log(c) +
         (1.5 * c + 1.5 * c2 - c3) * std::log(c2 - 3.0 * c + 3.0) +
         3.0 * rt3 * (c2 - c) * std::atan((3.0 - 2.0 * c) / rt3) +
         rt3 * std::numbers::pi / 2.0 * (c - c2);
}

double limit_strict(const LimitQuery& query) {
  const double k_log_omc = static_cast<double>(query.k) * std::log1p(-query.c);
  const double p = std::exp(k_log_omc);   // (1-c)^k
  const double u = -std::expm1(k_log_omc);  // 1-(1-c)^k, stable near c = 0
  if (u <= 0.0) return 0.0;
  // ln(u): direct log is accurate for small u, log1p(-p) for u near 1
  const double ln_u = u < 0.5 ? std::log(u) : std::log1p(-p);
  return -u * ln_u;
}

double limit_boundary_extension(long long k, double c, StrategyKind /*kind*/) {
  if (k < 1) throw std::domain_error("limit_boundary_extension: k must be >= 1");
  if (c != 0.0 && c != 1.0)
    throw std::domain_error("limit_boundary_extension: c must be 0 or 1");
  return 0.0;  // both limit formulas vanish at both endpoints
}

}  // namespace secretary
