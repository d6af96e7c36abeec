#pragma once

#include <cmath>

namespace quartic {

// Thresholds for deciding when a value of f counts as zero. Sign and
// tangency thresholds scale with 1 + |a| + |b|, the natural magnitude of f.
struct Tolerances {
  double sign_rel = 1e-11;
  double tangent_rel = 1e-9;
  double theta = 1e-12;
  // Multiplies every threshold above (the CLI's --tol-scale).
  double scale = 1.0;

  double sign(double a, double b) const {
    return sign_rel * scale * (1.0 + std::abs(a) + std::abs(b));
  }
  double tangent(double a, double b) const {
    return tangent_rel * scale * (1.0 + std::abs(a) + std::abs(b));
  }
  double theta_step() const { return theta * scale; }
};

}  // namespace quartic
