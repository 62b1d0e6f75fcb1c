#pragma once

#include <algorithm>
#include <cmath>

namespace gyrolab {

// Absolute-plus-relative comparison policy. Carried per contract rather than
// globally: Mobius denominators near the disk boundary amplify error, so a
// caller probing close to the boundary can widen it.
struct Tolerance {
  double abs = 1e-9;
  double rel = 1e-9;

  bool close(double a, double b) const {
    return std::fabs(a - b) <= abs + rel * std::max(std::fabs(a), std::fabs(b));
  }
};

}  // namespace gyrolab
