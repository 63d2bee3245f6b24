#pragma once

#include <cmath>

namespace eulersum {

// Neumaier variant of compensated summation: also captures the case where
// the incoming term is larger in magnitude than the running sum.
struct kahan_accumulator {
  double sum = 0.0;
  double compensation = 0.0;

  kahan_accumulator& operator+=(double term) {
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      compensation += (sum - t) + term;
    } else {
      compensation += (term - t) + sum;
    }
    sum = t;
    return *this;
  }

  double result() const { return sum + compensation; }
};

}  // namespace eulersum
