#pragma once

#include <string>
#include <utility>
#include <vector>

#include <eulersum/harmonic.hpp>

namespace eulersum {

// Finite convolution identities for generalized harmonic numbers, checked in
// exact rational arithmetic.  The H family expresses H_n^(p) through double
// sums over 1/(ℓ^j (n+1−ℓ)^(p+1−j)); the H̄ family does the same with the
// alternating sign (−1)^(n+1−ℓ) and has parity-dependent special cases.

enum class h_variant { general, odd_particular, even_particular };
enum class hbar_variant { general, even_case, odd_case };

struct identity_check {
  std::string name;
  std::vector<std::pair<std::string, long long>> parameters;
  rational lhs;
  rational rhs;
  bool pass = false;  // true iff lhs == rhs as canonical rationals
};

// H_n^(p) against its convolution expansion.  k selects the telescoping
// depth for the general variant (0 ≤ k ≤ p, rhs independent of k); the
// particular variants require odd/even p and ignore k.
identity_check convolution_check_h(long long n, int p, int k, h_variant variant);

// H̄_n^(p) against its signed expansion; even_case requires p+n even,
// odd_case asserts the full j-sum vanishes for p+n odd.  k as above.
identity_check convolution_check_hbar(long long n, int p, int k, hbar_variant variant);

}  // namespace eulersum
