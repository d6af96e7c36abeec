#include "quartic/trig_reduction.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quartic/error.hpp"

namespace quartic {

namespace {

void check_angle(double theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw Error(ErrorKind::kDomain,
                "angle " + std::to_string(theta) + " outside [0, pi]");
  }
}

}  // namespace

TrigParams reduce(DepressedQuartic const& P) {
  require_finite(P);
  if (!(P.m < 0.0)) {
    throw Error(ErrorKind::kNotReducible,
                "trigonometric reduction requires m < 0");
  }
  TrigParams tp;
  tp.u = std::sqrt(-P.m);
  // (-m)^(3/2) == u^3.
  tp.a = 8.0 * P.p / (tp.u * tp.u * tp.u);
  tp.b = 8.0 * P.q / (P.m * P.m) - 1.0;
  tp.source = P;
  return tp;
}

double eval_f(TrigParams const& tp, double theta) {
  check_angle(theta);
  return tp.a * std::cos(theta) + std::cos(4.0 * theta) + tp.b;
}

double eval_f_prime(TrigParams const& tp, double theta) {
  check_angle(theta);
  return -tp.a * std::sin(theta) - 4.0 * std::sin(4.0 * theta);
}

double eval_f_second(TrigParams const& tp, double theta) {
  return -tp.a * std::cos(theta) - 16.0 * std::cos(4.0 * theta);
}

BoundaryValues boundary_values(TrigParams const& tp) {
  return {tp.a + 1.0 + tp.b, -tp.a + 1.0 + tp.b};
}

}  // namespace quartic
