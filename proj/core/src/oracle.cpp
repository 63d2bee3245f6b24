#include <eulersum/oracle.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <queue>
#include <vector>

#include <eulersum/errors.hpp>
#include <eulersum/kahan.hpp>
#include <eulersum/polylog.hpp>

namespace eulersum {
namespace {

constexpr double k_interior_band = 1e-6;
constexpr double k_gamma = 0.5772156649015329;  // Euler–Mascheroni

double ipow(double x, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

double clamp_to_unit(double x) {
  constexpr double slack = 4.0 * machine_eps;
  if (x > 1.0 && x <= 1.0 + slack) return 1.0;
  if (x < -1.0 && x >= -1.0 - slack) return -1.0;
  return x;
}

void validate(const series_spec& spec, const oracle_config& cfg) {
  if (!(cfg.tol > 0.0)) throw domain_error("series_sum: tol must be positive");
  if (cfg.max_terms < 1) throw domain_error("series_sum: max_terms must be >= 1");
  if (spec.p < 1 || spec.m < 1)
    throw domain_error("series_sum: spec orders must be >= 1");
}

// One stateful term stream: term(n) = yⁿ·F/n^m with F the harmonic factor
// (updated before or after use depending on the offset).
struct term_stream {
  double y;
  int p, m;
  bool hbar;
  bool use_before_update;  // true for the F_{n−1} offset
  double f = 0.0;
  double yp = 1.0;
  double sign_j = 1.0;
  long long n = 0;

  double next() {
    ++n;
    yp *= y;
    const double inv = 1.0 / static_cast<double>(n);
    const double incr = (hbar ? sign_j : 1.0) * ipow(inv, p);
    sign_j = -sign_j;
    double used;
    if (use_before_update) {
      used = f;
      f += incr;
    } else {
      f += incr;
      used = f;
    }
    return yp * used * ipow(inv, m);
  }
};

term_stream make_stream(const series_spec& spec, term_offset offset, double y) {
  return term_stream{y, spec.p, spec.m,
                     spec.family == family_kind::hbar,
                     offset == term_offset::n_minus_1};
}

eval_result sum_interior(const series_spec& spec, term_offset offset, double y,
                         const oracle_config& cfg) {
  const double ay = std::fabs(y);
  const double denom = (1.0 - ay) * (1.0 - ay);
  term_stream ts = make_stream(spec, offset, y);
  kahan_accumulator acc;
  for (;;) {
    if (ts.n >= cfg.max_terms)
      throw tolerance_error("series_sum: max_terms exhausted in interior mode");
    acc += ts.next();
    const double nd = static_cast<double>(ts.n);
    const double tail =
        std::fabs(ts.yp * y) * ((nd + 1.0) - nd * ay) / denom;
    if (tail < cfg.tol) {
      const double s = acc.result();
      return {s, tail + nd * machine_eps * std::fabs(s)};
    }
  }
}

// Averaging triangle over the chronological window; returns the deepest-row
// newest element and the last in-row correction.
void average_window(std::vector<double>& row, int depth, double& est, double& corr) {
  int len = static_cast<int>(row.size());
  depth = std::min(depth, len - 1);
  for (int pass = 1; pass <= depth; ++pass) {
    for (int i = 0; i + pass < len; ++i) row[static_cast<size_t>(i)] = 0.5 * (row[static_cast<size_t>(i)] + row[static_cast<size_t>(i + 1)]);
  }
  len -= depth;
  est = row[static_cast<size_t>(len - 1)];
  corr = (len >= 2) ? std::fabs(row[static_cast<size_t>(len - 1)] - row[static_cast<size_t>(len - 2)])
                    : std::fabs(est);
}

eval_result sum_accelerated(const series_spec& spec, term_offset offset, double y,
                            const oracle_config& cfg) {
  if (!(y < 0.0))
    throw domain_error("series_sum: accelerated_alternating needs alternating terms");
  constexpr int window = 60, depth = 30;
  std::array<double, window> ring{};
  term_stream ts = make_stream(spec, offset, y);
  kahan_accumulator acc;

  long long checkpoint = 64;
  double prev_est = 0.0, prev_corr = 0.0;
  bool have_prev = false;
  double best_est = 0.0, best_err = std::numeric_limits<double>::infinity();

  while (ts.n < cfg.max_terms) {
    acc += ts.next();
    ring[static_cast<size_t>((ts.n - 1) % window)] = acc.result();
    if (ts.n == checkpoint || ts.n == cfg.max_terms) {
      checkpoint *= 2;
      const int have = static_cast<int>(std::min<long long>(ts.n, window));
      std::vector<double> row(static_cast<size_t>(have));
      for (int i = 0; i < have; ++i)
        row[static_cast<size_t>(i)] = ring[static_cast<size_t>((ts.n - have + i) % window)];
      double est, corr;
      average_window(row, depth, est, corr);
      if (have_prev) {
        const double err = 2.0 * (corr + std::fabs(est - prev_est)) +
                           2.0 * machine_eps * std::fabs(est);
        if (err < best_err) {
          best_err = err;
          best_est = est;
        }
        if (best_err <= cfg.tol) return {best_est, best_err};
      }
      prev_est = est;
      prev_corr = corr;
      have_prev = true;
    }
  }
  if (std::isfinite(best_err)) return {best_est, best_err};
  const double s = acc.result();
  if (have_prev)  // single checkpoint: bound by distance to the raw partial sum
    return {prev_est, 2.0 * (prev_corr + std::fabs(prev_est - s))};
  return {s, 2.0 * std::fabs(s) + 1.0};  // no checkpoint at all: loudly useless
}

double tail_estimate(const series_spec& spec, double fn_limit, long long n, int m) {
  // ∫_N^∞ asymptote(s)/s^m ds with F_n → fn_limit (H̄ and H with p ≥ 2) or
  // F_n ≈ log n + γ (H with p = 1).
  const double nd = static_cast<double>(n);
  const double n1m = std::pow(nd, 1.0 - m);  // N^{1−m}
  if (spec.family == family_kind::h && spec.p == 1)
    return (std::log(nd) + k_gamma) * n1m / (m - 1) + n1m / ((m - 1) * (m - 1));
  return fn_limit * n1m / (m - 1);
}

eval_result sum_direct_capped(const series_spec& spec, term_offset offset, double y,
                              const oracle_config& cfg) {
  if (!(y > 0.0))
    throw domain_error("series_sum: direct_capped needs non-alternating terms");
  // m == 1 at this endpoint was rejected as divergent before dispatch
  double fn_limit = 0.0;
  if (spec.family == family_kind::hbar)
    fn_limit = eta(spec.p).value;
  else if (spec.p >= 2)
    fn_limit = zeta(spec.p).value;

  term_stream ts = make_stream(spec, offset, y);
  kahan_accumulator acc;
  double tail = 0.0;
  while (ts.n < cfg.max_terms) {
    acc += ts.next();
    if ((ts.n & 1023) == 0) {
      tail = tail_estimate(spec, fn_limit, ts.n, spec.m);
      if (2.0 * tail <= cfg.tol) break;
    }
  }
  tail = tail_estimate(spec, fn_limit, ts.n, spec.m);
  const double s = acc.result() + tail;
  return {s, 2.0 * tail + machine_eps * std::fabs(s)};
}

}  // namespace

eval_result series_sum(const series_spec& spec, term_offset offset, double x,
                       const oracle_config& cfg) {
  validate(spec, cfg);
  x = clamp_to_unit(x);
  if (std::fabs(x) > 1.0 || std::isnan(x))
    throw domain_error("series_sum: |x| must be <= 1");
  if (x == 0.0) return {0.0, 0.0};

  const double y = (spec.sign == series_sign::minus) ? -x : x;
  if (y == 1.0 && spec.m == 1)
    throw divergent_series_error(
        "series_sum: non-alternating endpoint with weight 1/n diverges");

  if (std::fabs(x) <= 1.0 - k_interior_band)
    return sum_interior(spec, offset, y, cfg);

  switch (cfg.mode) {
    case endpoint_mode::interior:
      return sum_interior(spec, offset, y, cfg);
    case endpoint_mode::accelerated_alternating:
      return sum_accelerated(spec, offset, y, cfg);
    case endpoint_mode::direct_capped:
      return sum_direct_capped(spec, offset, y, cfg);
  }
  throw domain_error("series_sum: unknown endpoint mode");
}

namespace {

// (G7, K15) Gauss–Kronrod pair on [−1, 1]; Kronrod abscissae/weights plus
// the embedded 7-point Gauss weights (odd-index Kronrod nodes).
constexpr std::array<double, 8> k_xgk{
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr std::array<double, 8> k_wgk{
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
constexpr std::array<double, 4> k_wg{
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct cell {
  double a, b, k15, indicator;
};

cell evaluate_cell(const std::function<double(double)>& f, double a, double b) {
  const double h = 0.5 * (b - a);
  const double c = 0.5 * (a + b);
  double k15 = k_wgk[7] * f(c);
  double g7 = k_wg[3] * f(c);
  for (int i = 0; i < 7; ++i) {
    const double fv = f(c - h * k_xgk[static_cast<size_t>(i)]) +
                      f(c + h * k_xgk[static_cast<size_t>(i)]);
    k15 += k_wgk[static_cast<size_t>(i)] * fv;
    if (i % 2 == 1) g7 += k_wg[static_cast<size_t>(i / 2)] * fv;
  }
  k15 *= h;
  g7 *= h;
  return {a, b, k15, std::fabs(k15 - g7)};
}

eval_result adaptive_quadrature(const std::function<double(double)>& f,
                                double lo, double hi, double tol) {
  constexpr double k_min_width = 1e-14;
  constexpr int k_split_budget = 20000;

  auto worse = [](const cell& l, const cell& r) { return l.indicator < r.indicator; };
  std::priority_queue<cell, std::vector<cell>, decltype(worse)> heap(worse);
  std::vector<cell> frozen;  // cells at the width cap, no further refinement

  double total_err = 0.0;
  auto push = [&](const cell& c) {
    total_err += c.indicator;
    if (c.b - c.a < k_min_width)
      frozen.push_back(c);
    else
      heap.push(c);
  };

  push(evaluate_cell(f, lo, hi));
  int splits = 0;
  while (total_err >= tol / 2.0) {
    if (heap.empty() || splits >= k_split_budget)
      throw convergence_error(
          "quadrature: error indicator stalled above tol after the subdivision budget");
    const cell worst = heap.top();
    heap.pop();
    total_err -= worst.indicator;
    const double mid = 0.5 * (worst.a + worst.b);
    push(evaluate_cell(f, worst.a, mid));
    push(evaluate_cell(f, mid, worst.b));
    ++splits;
  }

  kahan_accumulator value, err;
  for (const cell& c : frozen) {
    value += c.k15;
    err += c.indicator;
  }
  while (!heap.empty()) {
    value += heap.top().k15;
    err += heap.top().indicator;
    heap.pop();
  }
  const double v = value.result();
  return {v, 2.0 * err.result() + machine_eps * std::fabs(v)};
}

std::function<double(double)> integrand_for(integral_id id) {
  switch (id) {
    case integral_id::l1:
      return [](double t) {
        const double lt = std::log(t);
        return lt * lt * std::log1p(-t) / (1.0 - t);
      };
    case integral_id::l2:
      return [](double t) {
        const double lt = std::log(t);
        return lt * lt * std::log1p(-t) / t;
      };
    case integral_id::l3a:
      return [](double t) {
        const double l = std::log1p(-t);
        return l * l / t;
      };
    case integral_id::l3b:
      return [](double t) {
        const double l = std::log1p(t);
        return l * l / t;
      };
    case integral_id::l4:
      return [](double t) {
        const double lt = std::log(t);
        return lt * lt * std::log1p(t) / (1.0 + t);
      };
    case integral_id::l6:
      return [](double t) { return std::log1p(-t) * std::log1p(t) / t; };
  }
  throw domain_error("quadrature: unknown integral id");
}

}  // namespace

eval_result quadrature(integral_id id, double x, const oracle_config& cfg) {
  if (!(cfg.tol > 0.0)) throw domain_error("quadrature: tol must be positive");
  x = clamp_to_unit(x);
  if (x < 0.0 || x > 1.0 || std::isnan(x))
    throw domain_error("quadrature: x must lie in [0, 1]");
  if (x == 0.0) return {0.0, 0.0};
  return adaptive_quadrature(integrand_for(id), 0.0, x, cfg.tol);
}

eval_result quadrature_log_linear_ratio(double a, double b, double c, double e,
                                        double t, const oracle_config& cfg) {
  if (!(cfg.tol > 0.0)) throw domain_error("quadrature: tol must be positive");
  if (std::isnan(t) || t < 0.0)
    throw domain_error("quadrature: upper limit must be >= 0");
  if (t == 0.0) return {0.0, 0.0};
  if (!(a > 0.0) || !(a + b * t > 0.0))
    throw domain_error("quadrature: log argument must stay positive on [0, t]");
  if (c == 0.0 || c + e * t == 0.0 || (c > 0.0) != (c + e * t > 0.0))
    throw domain_error("quadrature: denominator must not vanish on [0, t]");
  auto f = [a, b, c, e](double s) { return std::log(a + b * s) / (c + e * s); };
  return adaptive_quadrature(f, 0.0, t, cfg.tol);
}

}  // namespace eulersum
