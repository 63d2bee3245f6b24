#include <eulersum/closed_forms.hpp>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <eulersum/errors.hpp>
#include <eulersum/polylog.hpp>

namespace eulersum {
namespace {

constexpr double k_li_tol = 1e-13;      // internal polylog tolerance
constexpr double k_limit_band = 1e-12;  // endpoint distance below which limits take over
constexpr double k_pi = std::numbers::pi;
constexpr double k_ln2 = std::numbers::ln2;

using er = eval_result;

// composed irrational constant: a few ulps of slack
er c_(double v) { return {v, 4.0 * machine_eps * std::fabs(v)}; }

er li_(int p, double x) { return li(p, x, k_li_tol); }

// log of a quantity assembled from x without cancellation: one ulp of
// argument noise plus the log's own rounding
er lg(double v) {
  const double l = std::log(v);
  return {l, machine_eps * (std::fabs(l) + 1.0)};
}
er lg1m(double x) {  // log(1−x)
  const double l = std::log1p(-x);
  return {l, machine_eps * (std::fabs(l) + 1.0)};
}
er lg1p(double x) {  // log(1+x)
  const double l = std::log1p(x);
  return {l, machine_eps * (std::fabs(l) + 1.0)};
}
er logx(double x) { return ev_log_exact(x); }

er sq(const er& e) { return ev_mul(e, e); }
er cube(const er& e) { return ev_mul(sq(e), e); }
er quad(const er& e) { return ev_mul(sq(e), sq(e)); }

er zeta3() { return zeta(3); }
er zeta4() { return c_(k_pi * k_pi * k_pi * k_pi / 90.0); }

double clamp_unit(double x) {
  const double slack = 4.0 * machine_eps;
  if (std::fabs(x) > 1.0 && std::fabs(x) <= 1.0 + slack) return x < 0.0 ? -1.0 : 1.0;
  return x;
}

// dilogarithm / tetralogarithm continued to y < −1 by the standard real
// inversion; keeps the transformed-argument forms usable on all of (0, 1)
er li2_any(double y) {
  if (y >= -1.0) return li_(2, y);
  const er l = lg(-y);
  er v = c_(-k_pi * k_pi / 6.0);
  v = ev_sub(v, ev_scale(0.5, sq(l)));
  v = ev_sub(v, li_(2, 1.0 / y));
  return v;
}

er li4_any(double y) {
  if (y >= -1.0) return li_(4, y);
  const er l = lg(-y);
  er v = c_(-7.0 * k_pi * k_pi * k_pi * k_pi / 360.0);
  v = ev_sub(v, ev_mul(c_(k_pi * k_pi / 12.0), sq(l)));
  v = ev_sub(v, ev_scale(1.0 / 24.0, quad(l)));
  v = ev_sub(v, li_(4, 1.0 / y));
  return v;
}

// ---- series closed forms (x already domain-checked, never 0) --------------

er d1_form(double x) {  // ½ log²(1−x)
  return ev_scale(0.5, sq(lg1m(x)));
}

er d2_form(double x) {
  const er lx = logx(x), l1m = lg1m(x);
  er v = ev_scale(0.5, ev_mul(lx, sq(l1m)));
  v = ev_add(v, ev_mul(l1m, li_(2, 1.0 - x)));
  v = ev_sub(v, li_(3, 1.0 - x));
  v = ev_add(v, zeta3());
  return v;
}

er d3_form(double x) {
  const double r = 1.0 / (1.0 + x);
  const er lx = logx(x), l1p = lg1p(x);
  er v = ev_scale(0.5, ev_mul(lx, sq(l1p)));
  v = ev_sub(v, ev_scale(1.0 / 3.0, cube(l1p)));
  v = ev_sub(v, li_(3, r));
  v = ev_sub(v, ev_mul(l1p, li_(2, r)));
  v = ev_add(v, zeta3());
  return v;
}

er d4_const() { return c_(k_pi * k_pi * k_pi * k_pi / 360.0); }

er d5_const() {
  // π⁴/48 − 2·Li₄(½) − (7/4)·log2·ζ(3) + (π²/12)·log²2 − (1/12)·log⁴2
  er v = c_(k_pi * k_pi * k_pi * k_pi / 48.0);
  v = ev_sub(v, ev_scale(2.0, li_(4, 0.5)));
  v = ev_sub(v, ev_mul(c_(1.75 * k_ln2), zeta3()));
  v = ev_add(v, c_(k_pi * k_pi * k_ln2 * k_ln2 / 12.0));
  v = ev_sub(v, c_(k_ln2 * k_ln2 * k_ln2 * k_ln2 / 12.0));
  return v;
}

er t2p_form(double x) {
  const er lx = logx(x), l1m = lg1m(x);
  er v = ev_scale(2.0, li_(4, x));
  v = ev_add(v, li4_any(-x / (1.0 - x)));
  v = ev_sub(v, li_(4, 1.0 - x));
  v = ev_add(v, zeta4());
  v = ev_sub(v, ev_mul(li_(3, x), l1m));
  v = ev_add(v, ev_mul(zeta3(), l1m));
  v = ev_add(v, ev_scale(1.0 / 24.0, quad(l1m)));
  v = ev_sub(v, ev_scale(1.0 / 6.0, ev_mul(lx, cube(l1m))));
  v = ev_add(v, ev_mul(c_(k_pi * k_pi / 12.0), sq(l1m)));
  return v;
}

er t2m_form(double x) {
  const double r = 1.0 / (1.0 + x), w = x / (1.0 + x);
  const er lx = logx(x), l1p = lg1p(x);
  er v = ev_scale(2.0, li_(4, -x));
  v = ev_add(v, li_(4, r));
  v = ev_add(v, li_(4, w));
  v = ev_sub(v, zeta4());
  v = ev_add(v, ev_mul(l1p, li_(3, r)));
  v = ev_add(v, ev_mul(l1p, li_(3, w)));
  v = ev_add(v, ev_mul(c_(k_pi * k_pi / 12.0), sq(l1p)));
  v = ev_add(v, ev_scale(1.0 / 3.0, ev_mul(lx, cube(l1p))));
  v = ev_sub(v, ev_scale(0.25, quad(l1p)));
  return v;
}

er t3p_form(double x) {
  const er lx = logx(x), l1m = lg1m(x);
  er v = ev_scale(-1.0, ev_mul(li_(2, x), l1m));
  v = ev_sub(v, ev_mul(lx, sq(l1m)));
  v = ev_sub(v, ev_scale(2.0, ev_mul(l1m, li_(2, 1.0 - x))));
  v = ev_add(v, ev_scale(2.0, li_(3, 1.0 - x)));
  v = ev_sub(v, ev_scale(2.0, zeta3()));
  v = ev_add(v, li_(3, x));
  return v;
}

er t3m_form(double x) {
  const double r = 1.0 / (1.0 + x);
  const er lx = logx(x), l1p = lg1p(x);
  er v = ev_scale(-1.0, ev_mul(li_(2, -x), l1p));
  v = ev_sub(v, ev_mul(lx, sq(l1p)));
  v = ev_add(v, ev_scale(2.0 / 3.0, cube(l1p)));
  v = ev_add(v, ev_scale(2.0, ev_mul(l1p, li_(2, r))));
  v = ev_add(v, ev_scale(2.0, li_(3, r)));
  v = ev_sub(v, ev_scale(2.0, zeta3()));
  v = ev_add(v, li_(3, -x));
  return v;
}

er t4p_form(double x) {
  const er lx = logx(x), l1m = lg1m(x);
  er v = ev_scale(-1.0, li_(4, x));
  v = ev_sub(v, ev_scale(2.0, li4_any(-x / (1.0 - x))));
  v = ev_add(v, ev_scale(2.0, li_(4, 1.0 - x)));
  v = ev_sub(v, ev_scale(2.0, zeta4()));
  v = ev_add(v, ev_scale(2.0, ev_mul(li_(3, x), l1m)));
  v = ev_sub(v, ev_scale(2.0, ev_mul(zeta3(), l1m)));
  v = ev_add(v, ev_scale(0.5, sq(li_(2, x))));
  v = ev_sub(v, ev_mul(c_(k_pi * k_pi / 6.0), sq(l1m)));
  v = ev_add(v, ev_scale(1.0 / 3.0, ev_mul(lx, cube(l1m))));
  v = ev_sub(v, ev_scale(1.0 / 12.0, quad(l1m)));
  return v;
}

er t4m_form(double x) {
  const double r = 1.0 / (1.0 + x), w = x / (1.0 + x);
  const er lx = logx(x), l1p = lg1p(x);
  er v = ev_scale(-1.0, li_(4, -x));
  v = ev_sub(v, ev_scale(2.0, li_(4, w)));
  v = ev_sub(v, ev_scale(2.0, li_(4, r)));
  v = ev_add(v, ev_scale(2.0, zeta4()));
  v = ev_sub(v, ev_scale(2.0, ev_mul(li_(3, w), l1p)));
  v = ev_sub(v, ev_scale(2.0, ev_mul(li_(3, r), l1p)));
  v = ev_add(v, ev_scale(0.5, sq(li_(2, -x))));
  v = ev_sub(v, ev_mul(c_(k_pi * k_pi / 6.0), sq(l1p)));
  v = ev_sub(v, ev_scale(2.0 / 3.0, ev_mul(lx, cube(l1p))));
  v = ev_add(v, ev_scale(0.5, quad(l1p)));
  return v;
}

er t5_form(double x) {  // stays finite at x = −1: (1−x)/2 → 1 hits Li₂(1) = ζ(2)
  er v = ev_mul(c_(-k_ln2), lg1m(x));
  v = ev_add(v, li_(2, (1.0 - x) / 2.0));
  v = ev_sub(v, li_(2, 0.5));
  v = ev_sub(v, li_(2, -x));
  return v;
}

// ---- integral closed forms -------------------------------------------------

er l1_form(double x) {
  const er lx = logx(x), l1m = lg1m(x);
  er v = ev_scale(-2.0, li_(4, x));
  v = ev_sub(v, ev_scale(2.0, li4_any(-x / (1.0 - x))));
  v = ev_add(v, ev_scale(2.0, li_(4, 1.0 - x)));
  v = ev_sub(v, ev_scale(2.0, zeta4()));
  v = ev_add(v, ev_scale(2.0, ev_mul(li_(3, x), l1m)));
  v = ev_sub(v, ev_scale(2.0, ev_mul(li_(3, 1.0 - x), lx)));
  v = ev_add(v, ev_scale(2.0, ev_mul(li_(2, 1.0 - x), ev_mul(lx, l1m))));
  v = ev_sub(v, ev_mul(c_(k_pi * k_pi / 6.0), sq(l1m)));
  v = ev_add(v, ev_scale(0.5, ev_mul(sq(lx), sq(l1m))));
  v = ev_add(v, ev_scale(1.0 / 3.0, ev_mul(lx, cube(l1m))));
  v = ev_sub(v, ev_scale(1.0 / 12.0, quad(l1m)));
  v = ev_add(v, ev_scale(2.0, ev_mul(zeta3(), ev_sub(lx, l1m))));
  return v;
}

er l2_form(double x) {
  const er lx = logx(x);
  er v = ev_scale(-2.0, li_(4, x));
  v = ev_add(v, ev_scale(2.0, ev_mul(li_(3, x), lx)));
  v = ev_sub(v, ev_mul(li_(2, x), sq(lx)));
  return v;
}

er l3a_form(double x) {
  const er lx = logx(x), l1m = lg1m(x);
  er v = ev_mul(lx, sq(l1m));
  v = ev_add(v, ev_scale(2.0, ev_mul(l1m, li_(2, 1.0 - x))));
  v = ev_sub(v, ev_scale(2.0, li_(3, 1.0 - x)));
  v = ev_add(v, ev_scale(2.0, zeta3()));
  return v;
}

er l3b_form(double x) {
  const double r = 1.0 / (1.0 + x);
  const er lx = logx(x), l1p = lg1p(x);
  er v = ev_mul(lx, sq(l1p));
  v = ev_sub(v, ev_scale(2.0 / 3.0, cube(l1p)));
  v = ev_sub(v, ev_scale(2.0, li_(3, r)));
  v = ev_sub(v, ev_scale(2.0, ev_mul(l1p, li_(2, r))));
  v = ev_add(v, ev_scale(2.0, zeta3()));
  return v;
}

er l4_form(double x) {
  const double r = 1.0 / (1.0 + x), w = x / (1.0 + x);
  const er lx = logx(x), l1p = lg1p(x);
  er b = li_(4, -x);
  b = ev_add(b, li_(4, w));
  b = ev_add(b, li_(4, r));
  b = ev_sub(b, zeta4());
  b = ev_sub(b, ev_mul(zeta3(), lx));
  b = ev_add(b, ev_mul(li_(3, w), l1p));
  b = ev_add(b, ev_mul(li_(3, r), l1p));
  b = ev_add(b, ev_mul(li_(3, r), lx));
  b = ev_add(b, ev_mul(li_(2, r), ev_mul(lx, l1p)));
  er v = ev_scale(2.0, b);
  v = ev_add(v, ev_mul(c_(k_pi * k_pi / 6.0), sq(l1p)));
  v = ev_sub(v, ev_scale(0.5, ev_mul(sq(lx), sq(l1p))));
  v = ev_add(v, ev_scale(4.0 / 3.0, ev_mul(lx, cube(l1p))));
  v = ev_sub(v, ev_scale(0.5, quad(l1p)));
  return v;
}

// worst-case mass of the log-product integrands over an endpoint slice of
// width d; used as the error allowance when a limit replaces evaluation
double limit_allowance(double d) {
  if (d <= 0.0) return 0.0;
  const double l = std::log(d);
  return d * (2.0 * l * l + 4.0 * std::fabs(l) + 5.0);
}

er l6_at_one() {
  // log(1−t)-weighted pieces vanish in the x→1 limit, leaving
  // ⅓log³2 + log2·Li₂(½) − (3/2)ζ(3) + Li₃(½)  (= −(5/8)ζ(3))
  const er l2c = c_(k_ln2);
  er v = ev_scale(1.0 / 3.0, cube(l2c));
  v = ev_add(v, ev_mul(l2c, li_(2, 0.5)));
  v = ev_sub(v, ev_scale(1.5, zeta3()));
  v = ev_add(v, li_(3, 0.5));
  return v;
}

er l6_form(double x) {
  const double r = 1.0 / (1.0 + x);
  const double m2 = (1.0 - x) * (1.0 + x);  // 1 − x², cancellation-free
  const er lx = logx(x), l1m = lg1m(x), l1p = lg1p(x), lm2 = lg(m2);
  er v = ev_scale(0.5, ev_mul(lx, sq(lm2)));
  v = ev_sub(v, ev_scale(0.5, ev_mul(lx, sq(l1m))));
  v = ev_sub(v, ev_scale(0.5, ev_mul(lx, sq(l1p))));
  v = ev_add(v, ev_scale(1.0 / 3.0, cube(l1p)));
  v = ev_add(v, ev_scale(0.5, ev_mul(lm2, li_(2, m2))));
  v = ev_sub(v, ev_mul(l1m, li_(2, 1.0 - x)));
  v = ev_add(v, ev_mul(l1p, li_(2, r)));
  v = ev_sub(v, ev_scale(0.5, li_(3, m2)));
  v = ev_add(v, li_(3, 1.0 - x));
  v = ev_sub(v, ev_scale(1.5, zeta3()));
  v = ev_add(v, li_(3, r));
  return v;
}

// ∫₀ˣ log(1−t)log(1+t)/t dt with analytic limits at both endpoints; shared
// by the integral evaluator and the two alternating-weight tail series
integral_eval eval_l6(double x) {
  if (x == 0.0) return {{0.0, 0.0}, false};
  if (x < k_limit_band) return {{0.0, limit_allowance(x)}, true};
  if (x == 1.0) {
    const er v = l6_at_one();
    return {{v.value, v.err_bound}, true};
  }
  if (1.0 - x < k_limit_band) {
    const er v = l6_at_one();
    return {{v.value, v.err_bound + limit_allowance(1.0 - x)}, true};
  }
  const er v = l6_form(x);
  return {{v.value, v.err_bound}, false};
}

er t6p_form(double x) {
  er v = ev_mul(li_(2, -x), lg1m(x));
  v = ev_sub(v, li_(3, -x));
  const integral_eval tail = eval_l6(x);
  return ev_add(v, {tail.value, tail.err_bound});
}

er t6m_form(double x) {
  er v = ev_mul(li_(2, x), lg1p(x));
  v = ev_sub(v, li_(3, x));
  const integral_eval tail = eval_l6(x);
  return ev_add(v, {tail.value, tail.err_bound});
}

[[noreturn]] void reject(series_id id, const std::string& why) {
  throw domain_error(std::string(info(id).name) + ": " + why);
}

// dilogarithm restricted to |y| ≤ 1, as the ratio-integral forms require
er li2_checked(double y) {
  y = clamp_unit(y);
  if (std::fabs(y) > 1.0)
    throw domain_error("dilogarithm argument " + std::to_string(y) +
                       " exceeds 1 in magnitude");
  return li_(2, y);
}

}  // namespace

eval_result evaluate_closed_form(series_id id, double x) {
  if (std::isnan(x)) throw domain_error(std::string(info(id).name) + ": x is NaN");
  x = clamp_unit(x);
  if (x == 0.0) return {0.0, 0.0};

  switch (id) {
    case series_id::d1:
      if (x == 1.0) reject(id, "log(1-x) diverges at x = 1");
      if (std::fabs(x) > 1.0) reject(id, "needs |x| <= 1");
      return d1_form(x);

    case series_id::d2:
    case series_id::t2p:
    case series_id::t3p:
    case series_id::t4p:
      if (x < 0.0) reject(id, "needs 0 <= x < 1");
      if (x >= 1.0) reject(id, "log(1-x) diverges at x = 1");
      return id == series_id::d2    ? d2_form(x)
             : id == series_id::t2p ? t2p_form(x)
             : id == series_id::t3p ? t3p_form(x)
                                    : t4p_form(x);

    case series_id::d3:
    case series_id::t2m:
    case series_id::t3m:
    case series_id::t4m:
      if (x < 0.0) reject(id, "needs 0 <= x <= 1");
      if (x > 1.0) reject(id, "needs 0 <= x <= 1");
      return id == series_id::d3    ? d3_form(x)
             : id == series_id::t2m ? t2m_form(x)
             : id == series_id::t3m ? t3m_form(x)
                                    : t4m_form(x);

    case series_id::d4:
      if (x != 1.0) reject(id, "fixed constant, defined at x = 1 only");
      return d4_const();
    case series_id::d5:
      if (x != 1.0) reject(id, "fixed constant, defined at x = 1 only");
      return d5_const();

    case series_id::t5:
      if (x >= 1.0) reject(id, "log(1-x) diverges at x = 1");
      if (x < -1.0) reject(id, "needs -1 <= x < 1");
      return t5_form(x);

    case series_id::t6p:
      if (x < 0.0) reject(id, "needs 0 <= x < 1");
      if (x >= 1.0) reject(id, "log(1-x) diverges at x = 1");
      return t6p_form(x);
    case series_id::t6m:
      if (x < 0.0) reject(id, "needs 0 <= x <= 1");
      if (x > 1.0) reject(id, "needs 0 <= x <= 1");
      return t6m_form(x);
  }
  throw domain_error("unknown series id");
}

eval_result t5_second_form(double x) {
  if (std::isnan(x)) throw domain_error("t5 second form: x is NaN");
  x = clamp_unit(x);
  if (x == 0.0) return {0.0, 0.0};
  if (x >= 1.0) throw domain_error("t5 second form: log(1-x) diverges at x = 1");
  if (x <= -1.0)
    throw domain_error("t5 second form: log(1+x) diverges at x = -1; use the primary form");
  er v = ev_scale(-1.0, ev_mul(lg1m(x), lg1p(x)));
  v = ev_add(v, ev_mul(c_(k_ln2), lg1p(x)));
  v = ev_sub(v, li_(2, (1.0 + x) / 2.0));
  v = ev_add(v, li_(2, 0.5));
  v = ev_sub(v, li_(2, -x));
  return v;
}

eval_result t1_closed_form(int p, double x) {
  if (p < 1 || p % 2 == 0)
    throw domain_error("H^(p)/n closed form needs odd p >= 1, got p = " + std::to_string(p));
  if (std::isnan(x)) throw domain_error("H^(p)/n closed form: x is NaN");
  x = clamp_unit(x);
  if (x == 0.0) return {0.0, 0.0};
  if (x >= 1.0) throw domain_error("Li_1(x) = -log(1-x) diverges at x = 1");
  if (x < -1.0) throw domain_error("H^(p)/n closed form needs -1 <= x < 1");

  std::vector<er> lis(static_cast<size_t>(p) + 2);
  for (int j = 1; j <= p + 1; ++j) lis[static_cast<size_t>(j)] = li_(j, x);

  er s{0.0, 0.0};
  for (int j = 1; j <= p; ++j) {
    const er term = ev_mul(lis[static_cast<size_t>(j)], lis[static_cast<size_t>(p + 1 - j)]);
    s = (j % 2 == 1) ? ev_add(s, term) : ev_sub(s, term);
  }
  return ev_add(ev_scale(0.5, s), lis[static_cast<size_t>(p + 1)]);
}

integral_eval evaluate_log_integral(integral_id id, double x) {
  if (std::isnan(x))
    throw domain_error(std::string(info(id).name) + ": x is NaN");
  x = clamp_unit(x);
  const std::string name(info(id).name);
  if (x < 0.0) throw domain_error(name + ": integration limit needs x >= 0");
  if (x > 1.0) throw domain_error(name + ": integration limit needs x <= 1");
  if (x == 0.0) return {{0.0, 0.0}, false};

  switch (id) {
    case integral_id::l1:
      if (x == 1.0) throw domain_error(name + ": log(1-x) terms diverge at x = 1");
      return {l1_form(x), false};
    case integral_id::l2:
      if (x == 1.0) throw domain_error(name + ": log(1-x) weight diverges at x = 1");
      return {l2_form(x), false};
    case integral_id::l3a: {
      // log(x)log²(1−x) → 0 as x → 1; the limit leaves 2ζ(3)
      if (x == 1.0) {
        const er v = ev_scale(2.0, zeta3());
        return {{v.value, v.err_bound}, true};
      }
      if (1.0 - x < k_limit_band) {
        const er v = ev_scale(2.0, zeta3());
        return {{v.value, v.err_bound + limit_allowance(1.0 - x)}, true};
      }
      return {l3a_form(x), false};
    }
    case integral_id::l3b:
      return {l3b_form(x), false};
    case integral_id::l4:
      return {l4_form(x), false};
    case integral_id::l6:
      return eval_l6(x);
  }
  throw domain_error("unknown integral id");
}

eval_result log_linear_ratio_integral(double a, double b, double c, double e,
                                      double t, ratio_form form) {
  if (!(std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
        std::isfinite(e) && std::isfinite(t)))
    throw domain_error("log-ratio integral: parameters must be finite");
  if (e == 0.0) throw domain_error("log-ratio integral: closed forms need e != 0");
  if (t < 0.0) throw domain_error("log-ratio integral: needs t >= 0");
  if (!(a > 0.0) || !(a + b * t > 0.0))
    throw domain_error("log-ratio integral: log(a+b*s) leaves the real domain on [0, t]");
  if (c == 0.0 || c + e * t == 0.0 || (c > 0.0) != (c + e * t > 0.0))
    throw domain_error("log-ratio integral: denominator c+e*s crosses zero on [0, t]");

  const double det = a * e - b * c;
  if (det == 0.0)
    throw degenerate_error(
        "log-ratio integral: a*e == b*c makes the integrand "
        "log((b/e)(c+e*s))/(c+e*s); integrate it as the elementary difference "
        "of (1/(2e))*log((b/e)(c+e*s))^2 instead");
  if (t == 0.0) return {0.0, 0.0};

  const double den = -det;  // bc − ae
  if (form == ratio_form::first) {
    const double u = det / e;
    if (!(u > 0.0))
      throw domain_error("log-ratio integral, first form: log((a*e-b*c)/e) is not real");
    er v = ev_mul(lg(u), lg((c + e * t) / c));
    v = ev_sub(v, li2_checked(b * (c + e * t) / den));
    v = ev_add(v, li2_checked(b * c / den));
    return ev_scale(1.0 / e, v);
  }
  const double w1 = (b / e) * (c + e * t);
  const double w0 = b * c / e;
  if (!(w1 > 0.0) || !(w0 > 0.0))
    throw domain_error("log-ratio integral, second form: log((b/e)(c+e*s)) is not real on [0, t]");
  er v = ev_scale(0.5, ev_sub(sq(lg(w1)), sq(lg(w0))));
  v = ev_add(v, li2_checked(den / (b * (c + e * t))));
  v = ev_sub(v, li2_checked(den / (b * c)));
  return ev_scale(1.0 / e, v);
}

}  // namespace eulersum
