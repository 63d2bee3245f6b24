#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <eulersum/eval_result.hpp>
#include <eulersum/report.hpp>

namespace eulersum {

// Half-open arithmetic grid: start, start+step, … strictly below stop.
struct grid_spec {
  double start = 0.1;
  double stop = 0.95;
  double step = 0.1;
};

// Points of the grid; throws domain_error unless 0 <= start <= stop < 1 and
// step > 0.  start == stop is a valid empty grid.
std::vector<double> grid_points(const grid_spec& grid);

// A fixed example evaluation: a printed closed-form constant checked
// against the independent partial-sum oracle.
struct example_entry {
  std::string_view name;      // check name, e.g. "ex2_01"
  std::string_view block;     // table grouping: "s2", "s3", or "" (suite-only)
  double x;                   // evaluation point of the underlying series
  std::string_view series;    // the sum, spelled out
  std::string_view symbolic;  // the constant it equals, spelled out
  eval_result (*reference)();         // the constant, evaluated
  eval_result (*oracle)(double tol);  // the series, brute-forced
};

// The 14 fixed example checks: 11 H-family table rows (weight-4 constants,
// golden-ratio arguments, alternating weight-3) plus 2 alternating
// Hbar-family values plus the non-alternating weight-3 constant.
std::span<const example_entry> example_rows();

// Named suites:
//   theorems   closed forms vs series oracle over the grid
//   lemmas     integral closed forms vs adaptive quadrature over the grid
//   identities exact rational convolution box, n in [1,50], p in [1,7]
//   examples   the fixed example rows
//   all        everything above
// tol is added on top of the propagated err_bounds; oracle tolerances are
// derived from it, so an impossible tol (e.g. 0) fails every oracle-backed
// check instead of aborting the run.  Rows are sorted by (name, x).
verification_report run_suite(const std::string& suite, const grid_spec& grid,
                              double tol);

}  // namespace eulersum
