#include <eulersum/harmonic.hpp>

#include <cmath>
#include <string>

#include <eulersum/errors.hpp>
#include <eulersum/kahan.hpp>

namespace eulersum {
namespace {

double ipow(double x, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

// Balanced divide-and-conquer over [lo, hi] keeps intermediate numerators
// and denominators of comparable size, which is far cheaper than feeding a
// huge running rational one term at a time.
rational sum_range(long long lo, long long hi, int m, bool alternating) {
  if (lo == hi) {
    rational t(bigint(1), pow(bigint(lo), static_cast<unsigned>(m)));
    if (alternating && lo % 2 == 0) t = -t;
    return t;
  }
  const long long mid = lo + (hi - lo) / 2;
  return sum_range(lo, mid, m, alternating) +
         sum_range(mid + 1, hi, m, alternating);
}

void check_args(long long n, int order, const char* who) {
  if (n < 0) throw domain_error(std::string(who) + ": n must be >= 0");
  if (order < 1) throw domain_error(std::string(who) + ": order must be >= 1");
}

}  // namespace

rational harmonic_exact(long long n, int m) {
  check_args(n, m, "harmonic_exact");
  if (n == 0) return rational(0);
  return sum_range(1, n, m, false);
}

rational alt_harmonic_exact(long long n, int p) {
  check_args(n, p, "alt_harmonic_exact");
  if (n == 0) return rational(0);
  return sum_range(1, n, p, true);
}

double harmonic_float(long long n, int m) {
  check_args(n, m, "harmonic_float");
  kahan_accumulator acc;
  for (long long j = 1; j <= n; ++j)
    acc += 1.0 / ipow(static_cast<double>(j), m);
  return acc.result();
}

double alt_harmonic_float(long long n, int p) {
  check_args(n, p, "alt_harmonic_float");
  kahan_accumulator acc;
  double sign = 1.0;
  for (long long j = 1; j <= n; ++j) {
    acc += sign / ipow(static_cast<double>(j), p);
    sign = -sign;
  }
  return acc.result();
}

}  // namespace eulersum
