#pragma once

#include <eulersum/eval_result.hpp>

namespace eulersum {

// Σ_{n≥1} xⁿ/n^p for integer order p ≥ 0 and |x| ≤ 1.
//
// p = 0 and p = 1 route to the closed forms x/(1−x) and −log(1−x); x = ±1
// with p ≥ 2 route to zeta/eta so the slowly-convergent endpoints never hit
// the raw series.  Interior arguments are summed with compensated summation
// until the geometric tail bound |x|^{N+1} / ((N+1)^p (1−|x|)) drops below
// tol.  Arguments up to 4 ulps outside [−1,1] are clamped onto the boundary.
//
// Throws domain_error for |x| beyond the clamp window or a divergent
// endpoint, tolerance_error when tol is unreachable within the term budget.
eval_result li(int p, double x, double tol);

// ζ(p) for integer p ≥ 2, computed as eta(p) / (1 − 2^{1−p}).
eval_result zeta(int p);

// Σ_{n≥1} (−1)^{n−1}/n^p for integer p ≥ 1, accelerated by iterated
// averaging of partial sums; err_bound ≤ 1e−15.
eval_result eta(int p);

}  // namespace eulersum
