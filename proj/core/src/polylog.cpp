#include <eulersum/polylog.hpp>

#include <cmath>
#include <string>
#include <vector>

#include <eulersum/errors.hpp>
#include <eulersum/kahan.hpp>

namespace eulersum {
namespace {

constexpr long long k_term_budget = 100'000'000;

// x^e for integer e ≥ 0 by binary exponentiation.
double ipow(double x, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

// Snap values a few ulps outside [−1,1] back onto the boundary; such inputs
// come from upstream expressions like x/(1+x) evaluated in floating point.
double clamp_to_unit(double x) {
  constexpr double slack = 4.0 * machine_eps;
  if (x > 1.0 && x <= 1.0 + slack) return 1.0;
  if (x < -1.0 && x >= -1.0 - slack) return -1.0;
  return x;
}

}  // namespace

eval_result eta(int p) {
  if (p < 1) throw domain_error("eta: order must be >= 1");

  // Iterated averaging of consecutive partial sums.  For alternating series
  // with totally monotone terms each pass roughly halves the remainder, so
  // 64 rows already overshoot binary64; keep doubling if the final
  // correction has not collapsed yet.
  for (int m = 64; m <= 1024; m *= 2) {
    std::vector<double> s(static_cast<size_t>(m));
    kahan_accumulator acc;
    double sign = 1.0;
    for (int n = 1; n <= m; ++n) {
      acc += sign / ipow(static_cast<double>(n), p);
      s[static_cast<size_t>(n - 1)] = acc.result();
      sign = -sign;
    }
    double prev = s[0];
    double corr = 0.0;
    for (int pass = 1; pass < m; ++pass) {
      for (int i = 0; i + pass < m; ++i) s[static_cast<size_t>(i)] = 0.5 * (s[static_cast<size_t>(i)] + s[static_cast<size_t>(i + 1)]);
      corr = std::fabs(s[0] - prev);
      prev = s[0];
    }
    const double value = s[0];
    // Doubled final correction, plus a rounding allowance for the triangle.
    const double err = 2.0 * corr + 2.0 * machine_eps * std::fabs(value);
    if (err <= 1e-15) return {value, err};
  }
  throw tolerance_error("eta: averaging failed to reach 1e-15");
}

eval_result zeta(int p) {
  if (p < 2) throw domain_error("zeta: order must be >= 2");
  const eval_result e = eta(p);
  const double f = 1.0 - std::ldexp(1.0, 1 - p);  // exact for p >= 2
  const double value = e.value / f;
  return {value, e.err_bound / f + machine_eps * std::fabs(value)};
}

eval_result li(int p, double x, double tol) {
  if (p < 0) throw domain_error("li: order must be >= 0");
  if (!(tol > 0.0)) throw domain_error("li: tol must be positive");
  x = clamp_to_unit(x);
  if (std::fabs(x) > 1.0 || std::isnan(x))
    throw domain_error("li: argument must satisfy |x| <= 1, got " + std::to_string(x));

  if (p == 0) {
    if (std::fabs(x) == 1.0) throw domain_error("li: order 0 requires |x| < 1");
    const double v = x / (1.0 - x);
    return {v, 2.0 * machine_eps * std::fabs(v)};
  }
  if (p == 1) {
    if (x == 1.0) throw domain_error("li: order 1 diverges at x = 1");
    const double v = -std::log1p(-x);
    return {v, 2.0 * machine_eps * std::fabs(v)};
  }
  if (x == 1.0) return zeta(p);
  if (x == -1.0) return ev_scale(-1.0, eta(p));

  const double ax = std::fabs(x);
  kahan_accumulator acc;
  double xp = 1.0;
  long long n = 0;
  double tail = 0.0;
  for (;;) {
    ++n;
    if (n > k_term_budget)
      throw tolerance_error("li: term budget exhausted before tol was met");
    xp *= x;
    const double nd = static_cast<double>(n);
    acc += xp / (p == 2 ? nd * nd : ipow(nd, p));
    tail = std::fabs(xp * x) / (ipow(nd + 1.0, p) * (1.0 - ax));
    if (tail < tol) break;
    if (xp == 0.0) {  // underflow: remaining terms are below denormal range
      tail = 0.0;
      break;
    }
  }
  const double sum = acc.result();
  return {sum, tail + static_cast<double>(n) * machine_eps * std::fabs(sum)};
}

}  // namespace eulersum
