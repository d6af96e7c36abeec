#pragma once

#include <vector>

#include "quartic/tolerance.hpp"
#include "quartic/trig_reduction.hpp"

namespace quartic {

// Interior critical points of f. With x = cos(theta) they solve the cubic
// h(x) = 2x^3 - x = -a/16 on the open interval (-1, 1).
struct CriticalSet {
  std::vector<double> xs;      // ascending
  std::vector<double> thetas;  // acos(xs), ascending
};

struct MonotoneSegment {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
  int direction = 0;  // sign of f' on (lo, hi)
};

// Where a zero of f sits relative to the segment decomposition.
enum class ZeroSite { kInterior, kCritical, kBoundary };

struct InteriorZero {
  double theta = 0.0;
  // Zero detected at a critical point or at a boundary where f'' vanishes;
  // the matching root of P has even (or triple) multiplicity.
  bool tangent = false;
  int multiplicity = 1;
  ZeroSite site = ZeroSite::kInterior;
};

struct InteriorZeroReport {
  std::vector<InteriorZero> zeros;  // ascending in theta

  int count() const { return static_cast<int>(zeros.size()); }
  int multiplicity_count() const;
  bool any_tangent() const;
};

// h(x) = x (2x^2 - 1).
double critical_cubic(double x);

CriticalSet solve_critical_cubic(double a);

// Splits [0, pi] at the critical angles. Throws kInternalLogic if a segment
// has no detectable direction.
std::vector<MonotoneSegment> decompose(TrigParams const& tp,
                                       CriticalSet const& crit);

InteriorZeroReport count_interior_zeros(
    TrigParams const& tp, std::vector<MonotoneSegment> const& segs,
    Tolerances const& tol = {});

}  // namespace quartic
