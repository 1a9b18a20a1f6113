#pragma once

#include <algorithm>
#include <cmath>

namespace orlicz::testing {

inline bool rel_close(double a, double b, double tol) {
  if (a == b) return true;
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace orlicz::testing
