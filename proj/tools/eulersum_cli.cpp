#include <cctype>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <eulersum/closed_forms.hpp>
#include <eulersum/errors.hpp>
#include <eulersum/oracle.hpp>
#include <eulersum/registry.hpp>
#include <eulersum/report.hpp>
#include <eulersum/verify.hpp>

namespace es = eulersum;

namespace {

std::string lower(std::string s) {
  for (char& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

es::grid_spec parse_grid(const std::string& text) {
  const std::size_t a = text.find(':');
  const std::size_t b = a == std::string::npos ? a : text.find(':', a + 1);
  if (a == std::string::npos || b == std::string::npos)
    throw es::domain_error("grid: expected start:stop:step, got '" + text + "'");
  es::grid_spec g;
  try {
    g.start = std::stod(text.substr(0, a));
    g.stop = std::stod(text.substr(a + 1, b - a - 1));
    g.step = std::stod(text.substr(b + 1));
  } catch (const std::exception&) {
    throw es::domain_error("grid: expected three numbers start:stop:step");
  }
  return g;
}

// exit-code contract: 2 for domain-style rejections, 3 for accuracy failures
template <typename F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const es::tolerance_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const es::convergence_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const es::divergent_series_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const es::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

void require_tol_met(const es::eval_result& v, double tol) {
  if (v.err_bound > tol)
    throw es::tolerance_error("eval: err_bound " + es::float17(v.err_bound) +
                              " exceeds requested tol " + es::float17(tol));
}

int run_eval(const std::string& target, double x, int p, double tol) {
  if (!(tol > 0.0)) throw es::domain_error("eval: tol must be > 0");
  const std::string key = lower(target);

  if (key == "t1" || key == "theorem1") {
    if (std::isnan(x)) throw es::domain_error("eval: target needs --x");
    const es::eval_result v = es::t1_closed_form(p, x);
    require_tol_met(v, tol);
    std::cout << "target: T1\n"
              << "p: " << p << '\n'
              << "x: " << es::float17(x) << '\n'
              << "value: " << es::float17(v.value) << '\n'
              << "err_bound: " << es::float17(v.err_bound) << '\n'
              << "series: sum_{n>=1} H_n^(p) x^n / n, p odd\n";
    return 0;
  }

  if (const auto sid = es::series_from_name(target)) {
    const es::series_info& si = es::info(*sid);
    if (std::isnan(x)) {
      if (si.fixed_at_one)
        x = 1.0;
      else
        throw es::domain_error("eval: target needs --x");
    }
    const es::eval_result v = es::evaluate_closed_form(*sid, x);
    require_tol_met(v, tol);
    std::cout << "target: " << si.name << '\n'
              << "x: " << es::float17(x) << '\n'
              << "value: " << es::float17(v.value) << '\n'
              << "err_bound: " << es::float17(v.err_bound) << '\n'
              << "series: " << si.description << '\n';
    return 0;
  }

  if (const auto iid = es::integral_from_name(target)) {
    if (std::isnan(x)) throw es::domain_error("eval: target needs --x");
    const es::integral_eval v = es::evaluate_log_integral(*iid, x);
    require_tol_met(v, tol);
    std::cout << "target: " << es::info(*iid).name << '\n'
              << "x: " << es::float17(x) << '\n'
              << "value: " << es::float17(v.value) << '\n'
              << "err_bound: " << es::float17(v.err_bound) << '\n'
              << "integral: " << es::info(*iid).description << '\n';
    if (v.limit_note) std::cout << "limit_note: true\n";
    return 0;
  }

  throw es::domain_error("eval: unknown target '" + target + "'");
}

int run_verify(const std::string& suite, const std::string& grid_text,
               double tol, const std::string& format) {
  const es::grid_spec grid = parse_grid(grid_text);
  const es::verification_report report = es::run_suite(suite, grid, tol);
  std::cout << (format == "csv" ? es::to_csv(report) : es::to_json(report));
  return report.all_pass() ? 0 : 1;
}

struct table_row {
  std::string name;
  double x = 0.0;
  es::eval_result value;
  es::eval_result oracle;
  std::string symbolic;
};

es::oracle_config table_cfg(double tol, es::endpoint_mode mode) {
  es::oracle_config cfg;
  cfg.tol = tol * 0.1;
  cfg.mode = mode;
  return cfg;
}

std::vector<table_row> example_block(std::string_view block, double tol) {
  std::vector<table_row> rows;
  for (const es::example_entry& e : es::example_rows()) {
    if (e.block != block) continue;
    table_row row;
    row.name = std::string(e.name);
    row.x = e.x;
    row.value = e.reference();
    row.oracle = e.oracle(tol);
    row.symbolic = std::string(e.symbolic);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<table_row> doelder_rows(double tol) {
  struct entry {
    es::series_id id;
    double x;
    es::endpoint_mode mode;
    const char* symbolic;
  };
  static const entry k_entries[] = {
      {es::series_id::d1, 0.5, es::endpoint_mode::interior,
       "(1/2)log^2(1-x) at x = 1/2"},
      {es::series_id::d2, 0.5, es::endpoint_mode::interior,
       "(1/2)log(x)log^2(1-x) + log(1-x)Li2(1-x) - Li3(1-x) + zeta(3) at x = 1/2"},
      {es::series_id::d3, 0.5, es::endpoint_mode::interior,
       "(1/2)log(x)log^2(1+x) - (1/3)log^3(1+x) - Li3(1/(1+x)) - log(1+x)Li2(1/(1+x)) + zeta(3) at x = 1/2"},
      {es::series_id::d4, 1.0, es::endpoint_mode::direct_capped, "pi^4/360"},
      {es::series_id::d5, 1.0, es::endpoint_mode::accelerated_alternating,
       "pi^4/48 - 2Li4(1/2) - (7/4)log(2)zeta(3) + (pi^2/12)log^2(2) - (1/12)log^4(2)"},
  };
  std::vector<table_row> rows;
  for (const entry& e : k_entries) {
    const es::series_info& si = es::info(e.id);
    table_row row;
    row.name = std::string(si.name);
    row.x = e.x;
    row.value = es::evaluate_closed_form(e.id, e.x);
    row.oracle = es::ev_scale(si.oracle_scale,
                              es::series_sum(si.spec, si.offset, e.x,
                                             table_cfg(tol, e.mode)));
    row.symbolic = e.symbolic;
    rows.push_back(std::move(row));
  }
  return rows;
}

int run_table(const std::string& name, const std::string& format) {
  const double tol = 1e-10;
  std::vector<table_row> rows;
  if (name == "examples_s2")
    rows = example_block("s2", tol);
  else if (name == "examples_s3")
    rows = example_block("s3", tol);
  else if (name == "doelder")
    rows = doelder_rows(tol);
  else
    throw es::domain_error("table: unknown name '" + name +
                           "' (expected examples_s2, examples_s3, or doelder)");

  if (format == "csv") {
    std::cout << "name,x,value,oracle,abs_diff,symbolic\n";
    for (const table_row& r : rows)
      std::cout << r.name << ',' << es::float17(r.x) << ','
                << es::float17(r.value.value) << ','
                << es::float17(r.oracle.value) << ','
                << es::float17(std::fabs(r.value.value - r.oracle.value)) << ','
                << r.symbolic << '\n';
    return 0;
  }

  std::ostringstream out;
  out << std::left << std::setw(8) << "name" << std::setw(21) << "x"
      << std::setw(26) << "value" << std::setw(26) << "oracle"
      << std::setw(26) << "abs_diff" << "symbolic" << '\n';
  for (const table_row& r : rows)
    out << std::left << std::setw(8) << r.name << std::setw(21)
        << es::float17(r.x) << std::setw(26) << es::float17(r.value.value)
        << std::setw(26) << es::float17(r.oracle.value) << std::setw(26)
        << es::float17(std::fabs(r.value.value - r.oracle.value))
        << r.symbolic << '\n';
  std::cout << out.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"closed forms, brute-force oracles, and exact convolution "
               "identities for polylogarithmic Euler sums"};
  app.require_subcommand(1);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a registry entry's closed form");
  std::string target;
  double x = std::numeric_limits<double>::quiet_NaN();
  double eval_tol = 1e-12;
  int p = 1;
  eval_cmd->add_option("target", target,
                       "series id (D1..T6M), integral id (L1..L6), or T1/theorem1")
      ->required();
  eval_cmd->add_option("--x", x, "evaluation point (defaults to 1 for fixed constants)");
  eval_cmd->add_option("--p", p, "odd weight for the T1 family (default 1)");
  eval_cmd->add_option("--tol", eval_tol, "largest acceptable err_bound (default 1e-12)");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite and emit a report");
  std::string suite = "all";
  std::string grid_text = "0.1:0.95:0.1";
  std::string format = "json";
  double verify_tol = 1e-10;
  verify_cmd->add_option("--suite", suite, "theorems | lemmas | identities | examples | all");
  verify_cmd->add_option("--grid", grid_text, "half-open grid start:stop:step (default 0.1:0.95:0.1)");
  verify_cmd->add_option("--tol", verify_tol, "tolerance added to propagated bounds (default 1e-10)");
  verify_cmd->add_option("--format", format, "json | csv (default json)")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* table_cmd = app.add_subcommand("table", "print a fixed example table");
  std::string table_name;
  std::string table_format = "text";
  table_cmd->add_option("name", table_name, "examples_s2 | examples_s3 | doelder")->required();
  table_cmd->add_option("--format", table_format, "text | csv (default text)")
      ->check(CLI::IsMember({"text", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (eval_cmd->parsed()) return guarded([&] { return run_eval(target, x, p, eval_tol); });
  if (verify_cmd->parsed()) return guarded([&] { return run_verify(suite, grid_text, verify_tol, format); });
  return guarded([&] { return run_table(table_name, table_format); });
}
