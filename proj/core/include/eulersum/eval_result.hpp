#pragma once

#include <cmath>
#include <limits>

namespace eulersum {

inline constexpr double machine_eps = std::numeric_limits<double>::epsilon();

// A computed double together with a rigorous absolute error bound.
//
// Bounds combine pessimistically: every arithmetic helper adds the operands'
// bounds plus one rounding term for the operation itself, so a chain of
// operations can only grow err_bound, never shrink it.
struct eval_result {
  double value = 0.0;
  double err_bound = 0.0;
};

inline eval_result ev_exact(double v) { return {v, 0.0}; }

inline eval_result ev_add(const eval_result& a, const eval_result& b) {
  const double v = a.value + b.value;
  return {v, a.err_bound + b.err_bound + machine_eps * std::fabs(v)};
}

inline eval_result ev_sub(const eval_result& a, const eval_result& b) {
  const double v = a.value - b.value;
  return {v, a.err_bound + b.err_bound + machine_eps * std::fabs(v)};
}

inline eval_result ev_mul(const eval_result& a, const eval_result& b) {
  const double v = a.value * b.value;
  const double bound = std::fabs(a.value) * b.err_bound +
                       std::fabs(b.value) * a.err_bound +
                       a.err_bound * b.err_bound + machine_eps * std::fabs(v);
  return {v, bound};
}

inline eval_result ev_scale(double c, const eval_result& a) {
  const double v = c * a.value;
  return {v, std::fabs(c) * a.err_bound + machine_eps * std::fabs(v)};
}

// log of an exactly-known positive argument: one unit of roundoff.
inline eval_result ev_log_exact(double x) {
  const double v = std::log(x);
  return {v, machine_eps * std::fabs(v)};
}

// log with an inexact argument: first-order propagation |err_x / x|.
inline eval_result ev_log(const eval_result& x) {
  const double v = std::log(x.value);
  return {v, x.err_bound / std::fabs(x.value) + machine_eps * std::fabs(v)};
}

}  // namespace eulersum
