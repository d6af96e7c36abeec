#pragma once

#include <utility>

#include "quartic/poly_core.hpp"

namespace quartic {

// Parameters of f(theta) = a cos(theta) + cos(4 theta) + b, obtained from
// P(t) = t^4 + m t^2 + p t + q by t = u cos(theta) with u = sqrt(-m).
// f(theta) = 8 P(u cos theta) / u^4.
struct TrigParams {
  double u = 0.0;
  double a = 0.0;
  double b = 0.0;
  DepressedQuartic source;
};

struct BoundaryValues {
  double at_zero = 0.0;  // f(0) = a + 1 + b
  double at_pi = 0.0;    // f(pi) = -a + 1 + b
};

// Requires m < 0; throws kNotReducible otherwise.
TrigParams reduce(DepressedQuartic const& P);

// Both throw kDomain for theta outside [0, pi].
double eval_f(TrigParams const& tp, double theta);
double eval_f_prime(TrigParams const& tp, double theta);

// f''(theta) = -a cos(theta) - 16 cos(4 theta). Not range-checked.
double eval_f_second(TrigParams const& tp, double theta);

BoundaryValues boundary_values(TrigParams const& tp);

}  // namespace quartic
