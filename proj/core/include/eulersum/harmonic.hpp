#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace eulersum {

using bigint = boost::multiprecision::cpp_int;
using rational = boost::multiprecision::cpp_rational;

// H_n^(m) = Σ_{j=1..n} 1/j^m as an exact rational; n = 0 gives 0.
rational harmonic_exact(long long n, int m);

// H̄_n^(p) = Σ_{j=1..n} (−1)^{j−1}/j^p as an exact rational; n = 0 gives 0.
rational alt_harmonic_exact(long long n, int p);

// Compensated floating sums of the same prefixes; relative error stays
// below 4·n·2⁻⁵² of the exact value.
double harmonic_float(long long n, int m);
double alt_harmonic_float(long long n, int p);

}  // namespace eulersum
