#include <eulersum/verify.hpp>

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

#include <eulersum/closed_forms.hpp>
#include <eulersum/errors.hpp>
#include <eulersum/identities.hpp>
#include <eulersum/oracle.hpp>
#include <eulersum/polylog.hpp>
#include <eulersum/registry.hpp>

namespace eulersum {
namespace {

constexpr double k_pi = std::numbers::pi;
constexpr double k_ln2 = std::numbers::ln2;
constexpr double k_inf = std::numeric_limits<double>::infinity();
const double k_golden = (std::sqrt(5.0) - 1.0) / 2.0;

using er = eval_result;

er c_(double v) { return {v, 4.0 * machine_eps * std::fabs(v)}; }
er li_(int p, double x) { return li(p, x, 1e-13); }

oracle_config cfg_for(double tol, endpoint_mode mode) {
  oracle_config cfg;
  cfg.tol = tol * 0.1;  // a notch tighter than the comparison tolerance
  cfg.mode = mode;
  return cfg;
}

er osum(family_kind fam, int p, int m, series_sign sign, term_offset off,
        double x, double tol, endpoint_mode mode) {
  return series_sum(series_spec{fam, p, m, sign}, off, x, cfg_for(tol, mode));
}

// ---- printed constants for the fixed example rows --------------------------

er ex_c01() {  // Li4(1/2) + pi^4/720 - (1/8)log(2)zeta(3) + (1/24)log^4(2)
  er v = li_(4, 0.5);
  v = ev_add(v, c_(k_pi * k_pi * k_pi * k_pi / 720.0));
  v = ev_sub(v, ev_mul(c_(k_ln2 / 8.0), zeta(3)));
  v = ev_add(v, c_(k_ln2 * k_ln2 * k_ln2 * k_ln2 / 24.0));
  return v;
}

er ex_c02() {
  const double l32 = std::log(1.5), l6 = std::log(6.0);
  er v = ev_scale(2.0, li_(4, -0.5));
  v = ev_add(v, li_(4, 1.0 / 3.0));
  v = ev_add(v, li_(4, 2.0 / 3.0));
  v = ev_sub(v, c_(k_pi * k_pi * k_pi * k_pi / 90.0));
  v = ev_add(v, ev_mul(c_(l32), li_(3, 2.0 / 3.0)));
  v = ev_add(v, ev_mul(c_(l32), li_(3, 1.0 / 3.0)));
  v = ev_add(v, c_(k_pi * k_pi * l32 * l32 / 12.0));
  v = ev_sub(v, c_(l32 * l32 * l32 * l32 / 12.0));
  v = ev_sub(v, c_(l6 * l32 * l32 * l32 / 6.0));
  return v;
}

er ex_c03() {
  er v = ev_scale(2.0, li_(4, 0.5));
  v = ev_sub(v, c_(11.0 * k_pi * k_pi * k_pi * k_pi / 360.0));
  v = ev_add(v, ev_mul(c_(1.75 * k_ln2), zeta(3)));
  v = ev_sub(v, c_(k_pi * k_pi * k_ln2 * k_ln2 / 12.0));
  v = ev_add(v, c_(k_ln2 * k_ln2 * k_ln2 * k_ln2 / 12.0));
  return v;
}

er ex_c04() {  // -(1/4)zeta(3) + pi^2 log(2)/12 - log^3(2)/6
  er v = ev_scale(-0.25, zeta(3));
  v = ev_add(v, c_(k_pi * k_pi * k_ln2 / 12.0));
  v = ev_sub(v, c_(k_ln2 * k_ln2 * k_ln2 / 6.0));
  return v;
}

er ex_c05() { return ev_scale(5.0 / 8.0, zeta(3)); }

er ex_c06() {  // -(2/5)zeta(3) - (pi^2/5)log(g) + (2/3)log^3(g)
  const double lg = std::log(k_golden);
  er v = ev_scale(-0.4, zeta(3));
  v = ev_sub(v, c_(k_pi * k_pi * lg / 5.0));
  v = ev_add(v, c_(2.0 * lg * lg * lg / 3.0));
  return v;
}

er ex_c07() { return ev_add(ex_c06(), li_(3, k_golden)); }

er ex_c08() { return ev_sub(c_(k_pi * k_pi * k_ln2 / 12.0), zeta(3)); }

er ex_c09() {
  er v = li_(4, 0.5);
  v = ev_add(v, c_(k_pi * k_pi * k_pi * k_pi / 1440.0));
  v = ev_add(v, ev_mul(c_(k_ln2 / 4.0), zeta(3)));
  v = ev_sub(v, c_(k_pi * k_pi * k_ln2 * k_ln2 / 24.0));
  v = ev_add(v, c_(k_ln2 * k_ln2 * k_ln2 * k_ln2 / 24.0));
  return v;
}

er ex_c10() {
  const double l32 = std::log(1.5);
  er v = ev_scale(-1.0, li_(4, -0.5));
  er inner = ev_add(li_(4, 1.0 / 3.0), li_(4, 2.0 / 3.0));
  inner = ev_sub(inner, c_(k_pi * k_pi * k_pi * k_pi / 90.0));
  v = ev_sub(v, ev_scale(2.0, inner));
  er logs = ev_mul(c_(l32), ev_add(li_(3, 2.0 / 3.0), li_(3, 1.0 / 3.0)));
  v = ev_sub(v, ev_scale(2.0, logs));
  const er li2h = li_(2, -0.5);
  v = ev_add(v, ev_scale(0.5, ev_mul(li2h, li2h)));
  v = ev_sub(v, c_(k_pi * k_pi * l32 * l32 / 6.0));
  v = ev_add(v, c_(l32 * l32 * l32 * l32 / 2.0));
  v = ev_add(v, c_(2.0 * k_ln2 * l32 * l32 * l32 / 3.0));
  return v;
}

er ex_cd4() { return evaluate_closed_form(series_id::d4, 1.0); }
er ex_cd5() { return evaluate_closed_form(series_id::d5, 1.0); }

er ex_c31() { return ev_sub(c_(-k_pi * k_pi / 12.0), c_(k_ln2 * k_ln2 / 2.0)); }
er ex_c32() {
  return ev_add(ev_scale(-13.0 / 8.0, zeta(3)), c_(k_pi * k_pi * k_ln2 / 6.0));
}

// ---- partial-sum oracles for the same rows ---------------------------------

er ex_o01(double t) { return osum(family_kind::h, 1, 3, series_sign::plus, term_offset::n, 0.5, t, endpoint_mode::interior); }
er ex_o02(double t) { return osum(family_kind::h, 1, 3, series_sign::minus, term_offset::n, 0.5, t, endpoint_mode::interior); }
er ex_o03(double t) { return osum(family_kind::h, 1, 3, series_sign::minus, term_offset::n, 1.0, t, endpoint_mode::accelerated_alternating); }
er ex_o04(double t) { return osum(family_kind::h, 2, 1, series_sign::plus, term_offset::n_minus_1, 0.5, t, endpoint_mode::interior); }
er ex_o05(double t) { return osum(family_kind::h, 2, 1, series_sign::plus, term_offset::n, 0.5, t, endpoint_mode::interior); }
er ex_o06(double t) { return osum(family_kind::h, 2, 1, series_sign::plus, term_offset::n_minus_1, k_golden, t, endpoint_mode::interior); }
er ex_o07(double t) { return osum(family_kind::h, 2, 1, series_sign::plus, term_offset::n, k_golden, t, endpoint_mode::interior); }
er ex_o08(double t) { return osum(family_kind::h, 2, 1, series_sign::minus, term_offset::n, 1.0, t, endpoint_mode::accelerated_alternating); }
er ex_o09(double t) { return osum(family_kind::h, 2, 2, series_sign::plus, term_offset::n, 0.5, t, endpoint_mode::interior); }
er ex_o10(double t) { return osum(family_kind::h, 2, 2, series_sign::minus, term_offset::n, 0.5, t, endpoint_mode::interior); }
er ex_od4(double t) { return osum(family_kind::h, 1, 3, series_sign::plus, term_offset::n_minus_1, 1.0, t, endpoint_mode::direct_capped); }
er ex_od5(double t) {
  return ev_scale(-1.0, osum(family_kind::h, 1, 3, series_sign::minus, term_offset::n_minus_1, 1.0, t, endpoint_mode::accelerated_alternating));
}
er ex_o31(double t) { return osum(family_kind::hbar, 1, 1, series_sign::minus, term_offset::n, 1.0, t, endpoint_mode::accelerated_alternating); }
er ex_o32(double t) { return osum(family_kind::hbar, 2, 1, series_sign::minus, term_offset::n, 1.0, t, endpoint_mode::accelerated_alternating); }

// ---- row assembly -----------------------------------------------------------

void fill(check_row& row, const er& lhs, const er& rhs, double tol) {
  row.lhs = lhs.value;
  row.rhs = rhs.value;
  row.abs_diff = std::fabs(lhs.value - rhs.value);
  row.allowed = tol + lhs.err_bound + rhs.err_bound;
  row.pass = row.abs_diff <= row.allowed;
}

void mark_failed(check_row& row, double tol) {
  row.lhs = std::numeric_limits<double>::quiet_NaN();
  row.rhs = std::numeric_limits<double>::quiet_NaN();
  row.abs_diff = k_inf;
  row.allowed = tol;
  row.pass = false;
}

check_row check_series(series_id id, double x, double tol) {
  check_row row;
  row.name = std::string(info(id).name);
  row.x = x;
  try {
    const series_info& si = info(id);
    const er lhs = evaluate_closed_form(id, x);
    const er rhs = ev_scale(si.oracle_scale,
                            series_sum(si.spec, si.offset, x,
                                       cfg_for(tol, endpoint_mode::interior)));
    fill(row, lhs, rhs, tol);
  } catch (const error&) {
    mark_failed(row, tol);
  }
  return row;
}

check_row check_integral(integral_id id, double x, double tol) {
  check_row row;
  row.name = std::string(info(id).name);
  row.x = x;
  try {
    const integral_eval lhs = evaluate_log_integral(id, x);
    const er rhs = quadrature(id, x, cfg_for(tol, endpoint_mode::interior));
    fill(row, {lhs.value, lhs.err_bound}, rhs, tol);
  } catch (const error&) {
    mark_failed(row, tol);
  }
  return row;
}

std::string digest(const identity_check& chk) {
  std::string s = chk.name;
  s += '[';
  bool first = true;
  for (const auto& [key, val] : chk.parameters) {
    if (!first) s += ',';
    first = false;
    s += key;
    s += '=';
    if (key == "n" && val < 10) s += '0';
    s += std::to_string(val);
  }
  s += ']';
  return s;
}

void add_identity(std::vector<check_row>& rows, const identity_check& chk) {
  check_row row;
  row.name = digest(chk);
  for (const auto& [key, val] : chk.parameters)
    if (key == "n") row.x = static_cast<double>(val);
  row.lhs = chk.lhs.convert_to<double>();
  row.rhs = chk.rhs.convert_to<double>();
  row.allowed = 0.0;
  row.pass = chk.pass;
  if (chk.pass) {
    row.abs_diff = 0.0;
  } else {
    const rational diff = chk.lhs - chk.rhs;
    row.abs_diff = std::max(std::fabs(diff.convert_to<double>()),
                            std::numeric_limits<double>::denorm_min());
  }
  rows.push_back(row);
}

std::vector<check_row> suite_theorems(const std::vector<double>& grid, double tol) {
  static constexpr series_id k_ids[] = {
      series_id::d1,  series_id::d2,  series_id::d3,  series_id::t2p,
      series_id::t2m, series_id::t3p, series_id::t3m, series_id::t4p,
      series_id::t4m, series_id::t5,  series_id::t6p, series_id::t6m,
  };
  std::vector<check_row> rows;
  for (series_id id : k_ids) {
    for (double x : grid) rows.push_back(check_series(id, x, tol));
    if (id == series_id::d1 || id == series_id::t5)  // two-sided domains
      for (double x : grid) rows.push_back(check_series(id, -x, tol));
  }
  return rows;
}

std::vector<check_row> suite_lemmas(const std::vector<double>& grid, double tol) {
  std::vector<check_row> rows;
  for (const integral_info& ii : all_integrals())
    for (double x : grid) rows.push_back(check_integral(ii.id, x, tol));
  return rows;
}

std::vector<check_row> suite_identities() {
  std::vector<check_row> rows;
  for (long long n = 1; n <= 50; ++n) {
    for (int p = 1; p <= 7; ++p) {
      for (int k = 0; k <= p; ++k) {
        add_identity(rows, convolution_check_h(n, p, k, h_variant::general));
        add_identity(rows, convolution_check_hbar(n, p, k, hbar_variant::general));
      }
      if (p % 2 == 1)
        add_identity(rows, convolution_check_h(n, p, 0, h_variant::odd_particular));
      else
        add_identity(rows, convolution_check_h(n, p, 0, h_variant::even_particular));
      add_identity(rows, convolution_check_hbar(
                             n, p, 0,
                             (n + p) % 2 == 0 ? hbar_variant::even_case
                                              : hbar_variant::odd_case));
    }
  }
  return rows;
}

std::vector<check_row> suite_examples(double tol) {
  std::vector<check_row> rows;
  for (const example_entry& e : example_rows()) {
    check_row row;
    row.name = std::string(e.name);
    row.x = e.x;
    try {
      fill(row, e.reference(), e.oracle(tol), tol);
    } catch (const error&) {
      mark_failed(row, tol);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<double> grid_points(const grid_spec& grid) {
  if (!(grid.step > 0.0)) throw domain_error("grid: step must be > 0");
  if (!(grid.start >= 0.0) || !(grid.stop >= grid.start) || !(grid.stop < 1.0))
    throw domain_error("grid: need 0 <= start <= stop < 1");
  std::vector<double> xs;
  for (int i = 0;; ++i) {
    const double x = grid.start + i * grid.step;
    if (x >= grid.stop - 1e-12) break;
    xs.push_back(x);
    if (xs.size() > 100000) throw domain_error("grid: too many points");
  }
  return xs;
}

std::span<const example_entry> example_rows() {
  static const example_entry k_rows[] = {
      {"ex2_01", "s2", 0.5, "sum_{n>=1} H_n / (n^3 2^n)",
       "Li4(1/2) + pi^4/720 - (1/8)log(2)zeta(3) + (1/24)log^4(2)",
       &ex_c01, &ex_o01},
      {"ex2_02", "s2", 0.5, "sum_{n>=1} (-1)^n H_n / (n^3 2^n)",
       "2Li4(-1/2) + Li4(1/3) + Li4(2/3) - pi^4/90 + log(3/2)(Li3(2/3) + Li3(1/3)) "
       "+ (pi^2/12)log^2(3/2) - (1/12)log^4(3/2) - (1/6)log(6)log^3(3/2)",
       &ex_c02, &ex_o02},
      {"ex2_03", "s2", 1.0, "sum_{n>=1} (-1)^n H_n / n^3",
       "2Li4(1/2) - (11/360)pi^4 + (7/4)log(2)zeta(3) - (pi^2/12)log^2(2) + (1/12)log^4(2)",
       &ex_c03, &ex_o03},
      {"ex2_04", "s2", 0.5, "sum_{n>=1} H_n^(2) / ((n+1) 2^(n+1))",
       "-(1/4)zeta(3) + (pi^2/12)log(2) - (1/6)log^3(2)",
       &ex_c04, &ex_o04},
      {"ex2_05", "s2", 0.5, "sum_{n>=1} H_n^(2) / (n 2^n)",
       "(5/8)zeta(3)",
       &ex_c05, &ex_o05},
      {"ex2_06", "s2", k_golden, "sum_{n>=1} H_n^(2) (sqrt(5)-1)^(n+1) / ((n+1) 2^(n+1))",
       "-(2/5)zeta(3) - (pi^2/5)log((sqrt(5)-1)/2) + (2/3)log^3((sqrt(5)-1)/2)",
       &ex_c06, &ex_o06},
      {"ex2_07", "s2", k_golden, "sum_{n>=1} H_n^(2) (sqrt(5)-1)^n / (n 2^n)",
       "-(2/5)zeta(3) - (pi^2/5)log((sqrt(5)-1)/2) + (2/3)log^3((sqrt(5)-1)/2) + Li3((sqrt(5)-1)/2)",
       &ex_c07, &ex_o07},
      {"ex2_08", "s2", 1.0, "sum_{n>=1} (-1)^n H_n^(2) / n",
       "(pi^2/12)log(2) - zeta(3)",
       &ex_c08, &ex_o08},
      {"ex2_09", "s2", 0.5, "sum_{n>=1} H_n^(2) / (n^2 2^n)",
       "Li4(1/2) + pi^4/1440 + (1/4)log(2)zeta(3) - (1/24)pi^2 log^2(2) + (1/24)log^4(2)",
       &ex_c09, &ex_o09},
      {"ex2_10", "s2", 0.5, "sum_{n>=1} (-1)^n H_n^(2) / (n^2 2^n)",
       "-Li4(-1/2) - 2(Li4(1/3) + Li4(2/3) - pi^4/90) - 2log(3/2)(Li3(2/3) + Li3(1/3)) "
       "+ (1/2)Li2(-1/2)^2 - (pi^2/6)log^2(3/2) + (1/2)log^4(3/2) + (2/3)log(2)log^3(3/2)",
       &ex_c10, &ex_o10},
      {"d5", "s2", 1.0, "sum_{n>=1} (-1)^(n-1) H_(n-1) / n^3",
       "pi^4/48 - 2Li4(1/2) - (7/4)log(2)zeta(3) + (pi^2/12)log^2(2) - (1/12)log^4(2)",
       &ex_cd5, &ex_od5},
      {"ex3_01", "s3", 1.0, "sum_{n>=1} (-1)^n Hbar_n / n",
       "-pi^2/12 - (1/2)log^2(2)",
       &ex_c31, &ex_o31},
      {"ex3_02", "s3", 1.0, "sum_{n>=1} (-1)^n Hbar_n^(2) / n",
       "-(13/8)zeta(3) + (pi^2/6)log(2)",
       &ex_c32, &ex_o32},
      {"d4", "", 1.0, "sum_{n>=1} H_(n-1) / n^3",
       "pi^4/360",
       &ex_cd4, &ex_od4},
  };
  return k_rows;
}

verification_report run_suite(const std::string& suite, const grid_spec& grid,
                              double tol) {
  if (suite != "theorems" && suite != "lemmas" && suite != "identities" &&
      suite != "examples" && suite != "all")
    throw domain_error("unknown suite: " + suite);

  const auto t0 = std::chrono::steady_clock::now();
  const bool all = suite == "all";

  verification_report report;
  report.suite = suite;
  auto append = [&report](std::vector<check_row> rows) {
    report.checks.insert(report.checks.end(),
                         std::make_move_iterator(rows.begin()),
                         std::make_move_iterator(rows.end()));
  };

  if (all || suite == "theorems") append(suite_theorems(grid_points(grid), tol));
  if (all || suite == "lemmas") append(suite_lemmas(grid_points(grid), tol));
  if (all || suite == "identities") append(suite_identities());
  if (all || suite == "examples") append(suite_examples(tol));

  sort_rows(report.checks);
  const auto t1 = std::chrono::steady_clock::now();
  report.runtime_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
  return report;
}

}  // namespace eulersum
