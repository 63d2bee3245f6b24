#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eulersum {

// One verification row.  x carries the grid point (or the leading integer
// parameter for exact-arithmetic checks whose name encodes the rest).
struct check_row {
  std::string name;
  double x = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_diff = 0.0;
  double allowed = 0.0;
  bool pass = false;
};

struct verification_report {
  std::string suite;
  std::vector<check_row> checks;
  std::int64_t runtime_ms = 0;

  std::size_t total() const { return checks.size(); }
  std::size_t passed() const;
  std::size_t failed() const { return total() - passed(); }
  bool all_pass() const { return passed() == total(); }
};

// Shortest round-trip decimal, zero-padded to 17 significant digits so
// reports are diff-stable; non-finite values render as inf/-inf/nan.
std::string float17(double v);

// Canonical row order: lexicographic by name, then ascending x.
void sort_rows(std::vector<check_row>& rows);

// Renderers; key/column order is fixed and output ends with a newline.
// JSON layout: {suite, checks[], summary{total,passed,failed}, runtime_ms}.
// CSV columns: name,x,lhs,rhs,abs_diff,allowed,pass.
std::string to_json(const verification_report& report);
std::string to_csv(const verification_report& report);

}  // namespace eulersum
