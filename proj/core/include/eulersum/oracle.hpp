#pragma once

#include <eulersum/eval_result.hpp>
#include <eulersum/registry.hpp>

namespace eulersum {

// How series_sum treats arguments in the endpoint band |x| > 1 − 1e−6.
// Interior arguments always use the tail-bounded partial sum regardless of
// this setting.
enum class endpoint_mode { interior, accelerated_alternating, direct_capped };

struct oracle_config {
  double tol = 1e-10;
  long long max_terms = 100'000'000;
  endpoint_mode mode = endpoint_mode::interior;
};

// Brute-force evaluation of Σ_{n≥1} (±1)ⁿ F_n^{(p)} xⁿ / n^m with the
// harmonic factor maintained incrementally.
//
//  - interior (|x| ≤ 1 − 1e−6): compensated partial sum, truncated when the
//    crude tail bound Σ_{k>N} k·|x|^k < tol (uses F_k ≤ k, 1/k^m ≤ 1).
//  - accelerated_alternating (x·sign < 0 at the endpoint band): iterated
//    pairwise averaging (depth 30 over the last 60 partial sums), with the
//    empirical error re-measured at doubling checkpoints.
//  - direct_capped (x·sign > 0, m ≥ 2): direct sum plus an integral tail
//    estimate from the F_n asymptote; err_bound = 2× the estimate.
//
// Throws divergent_series_error when (spec, x) does not converge, and
// tolerance_error when interior mode exhausts max_terms.
eval_result series_sum(const series_spec& spec, term_offset offset, double x,
                       const oracle_config& cfg);

// Adaptive Gauss–Kronrod (G7,K15) quadrature of the registered integrands
// on [0, x].  The rule is open (no endpoint evaluations); refinement
// bisects the worst cell first, so log singularities at 0 and 1 are chased
// geometrically.  err_bound = 2× the summed error indicator.
eval_result quadrature(integral_id id, double x, const oracle_config& cfg);

// Same machinery for ∫₀ᵗ log(a + b·s)/(c + e·s) ds (smooth integrand).
eval_result quadrature_log_linear_ratio(double a, double b, double c, double e,
                                        double t, const oracle_config& cfg);

}  // namespace eulersum
