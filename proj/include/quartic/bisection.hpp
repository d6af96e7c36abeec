#pragma once

#include <cmath>

namespace quartic {

// Bisection on a bracket whose endpoint values have opposite signs (or where
// one of them is already zero). Stops when the bracket is no wider than
// `width`, or when it can no longer be split in double precision, and
// returns whichever endpoint has the smaller |g|.
template <typename Function>
double bisect(Function&& g, double lo, double hi, double g_lo, double g_hi,
              double width = 0.0) {
  if (g_lo == 0.0) return lo;
  if (g_hi == 0.0) return hi;
  bool const lo_negative = g_lo < 0.0;
  for (int iteration = 0; iteration < 2200; ++iteration) {
    if (hi - lo <= width) break;
    double const mid = lo + 0.5 * (hi - lo);
    // Bracket has shrunk to adjacent doubles.
    if (mid <= lo || mid >= hi) break;
    double const g_mid = g(mid);
    if (g_mid == 0.0) return mid;
    if ((g_mid < 0.0) == lo_negative) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
      g_hi = g_mid;
    }
  }
  return std::abs(g_lo) <= std::abs(g_hi) ? lo : hi;
}

}  // namespace quartic
