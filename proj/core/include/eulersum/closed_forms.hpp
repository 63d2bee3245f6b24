#pragma once

#include <eulersum/eval_result.hpp>
#include <eulersum/registry.hpp>

namespace eulersum {

struct integral_eval : eval_result {
  // true when a 0·∞ endpoint product was resolved by its analytic limit
  bool limit_note = false;
};

// Closed form of the registered series at x.  Domains are id-specific (see
// the registry descriptions); x = 0 returns 0 for every id.  The ids that
// admit x = 1 despite individually divergent-looking groupings (T3M, T6M)
// return dedicated cancellation-free constants there.
eval_result evaluate_closed_form(series_id id, double x);

// The Hbar/n series (T5) has two algebraically equal closed forms; the main
// evaluator uses the one that stays finite at x = −1, this exposes the other
// for equivalence checks (needs x > −1).
eval_result t5_second_form(double x);

// Closed form of Σ_{n≥1} H_n^(p) xⁿ/n for odd p ≥ 1 and −1 ≤ x < 1:
//   ½ Σ_{j=1}^{p} (−1)^{j−1} Li_j(x) Li_{p+1−j}(x) + Li_{p+1}(x).
eval_result t1_closed_form(int p, double x);

// Closed form of the registered log-product integral over [0, x].
integral_eval evaluate_log_integral(integral_id id, double x);

// ∫₀ᵗ log(a + b·s)/(c + e·s) ds via either of two antiderivative forms
// (they differ by which reciprocal pair of dilogarithm arguments appears).
enum class ratio_form { first, second };
eval_result log_linear_ratio_integral(double a, double b, double c, double e,
                                      double t, ratio_form form);

}  // namespace eulersum
