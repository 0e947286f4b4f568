#pragma once

#include <stdexcept>

#include "secretary/finite.hpp"

namespace secretary {

/// Point query for the large-n limit: cutoffs growing as M ~ c*k*n.
struct LimitQuery {
  long long k;
  double c;

  LimitQuery(long long copies, double fraction) : k(copies), c(fraction) {
    if (k < 1) throw std::domain_error("LimitQuery: k must be >= 1");
    if (!(c > 0.0 && c < 1.0))
      throw std::domain_error("LimitQuery: c must lie strictly in (0,1)");
  }
};

/// Truncation control for the power-series evaluators. A series is stopped
/// once its geometric tail bound drops below abs_tol.
struct SeriesEvalPolicy {
  double abs_tol = 1e-14;
  long long max_terms = 1'000'000;
};

/// Raised when a series cannot meet abs_tol within max_terms.
struct ToleranceNotReached : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// int_0^x y^(k-l-1)/(1-y^k) dy for 0 <= x < 1, k >= 2, 1 <= l <= k-1,
/// summed termwise as sum_{m>=0} x^(mk+k-l)/(mk+k-l).
double integral_term(long long k, long long l, double x,
                     const SeriesEvalPolicy& policy = {});

/// G(x) = sum_{s>=1} x^(k(s+1)) / (k(s+1)-l), summed directly.
double g_function_series(long long k, long long l, double x,
                         const SeriesEvalPolicy& policy = {});

/// The same G(x) through its antiderivative:
///   l < k:  -x^k/(k-l) + x^l * int_0^x y^(k-l-1)/(1-y^k) dy
///   l = k:  -(x^k/k) * ln(1-x^k)
double g_function_closed(long long k, long long l, double x,
                         const SeriesEvalPolicy& policy = {});

/// Evaluates both routes, requires them to agree within 10*abs_tol, and
/// returns the series value.
double g_function(long long k, long long l, double x,
                  const SeriesEvalPolicy& policy = {});

/// Limiting win probability of the inclusive strategy with M ~ c*k*n:
///
///   -(1-c)^k sum_{l=1}^{k-1} C(k,l) (c/(1-c))^l l/(k-l)
///   + k sum_{l=1}^{k-1} C(k,l) c^l int_0^(1-c) y^(k-l-1)/(1-y^k) dy
///   - c^k ln(1-(1-c)^k)
///
/// For k = 1 both sums are empty and the value reduces to -c ln c.
double limit_inclusive(const LimitQuery& query, const SeriesEvalPolicy& policy = {});

/// Equivalent form of the same limit built from G alone:
///
///   k sum_{l=1}^{k} C(k,l) (c/(1-c))^l G_{k,l}(1-c)
///   + sum_{l=1}^{k-1} C(k,l) c^l (1-c)^(k-l)
///
/// Kept as an independent route for cross-checking limit_inclusive.
double limit_inclusive_series_form(const LimitQuery& query,
                                   const SeriesEvalPolicy& policy = {});

/// Closed forms of the inclusive limit for k = 2 and k = 3.
double limit_inclusive_closed_k2(double c);
double limit_inclusive_closed_k3(double c);

/// Limiting win probability of the strict strategy with M ~ c*k*n:
///   -(1-(1-c)^k) * ln(1-(1-c)^k)
/// computed through expm1/log1p so both endpoints stay stable.
double limit_strict(const LimitQuery& query);

/// Continuous extension at the endpoints: both limits tend to 0 at c = 0 and
/// c = 1 for every k and both strategy kinds.
double limit_boundary_extension(long long k, double c, StrategyKind kind);

}  // namespace secretary
