#include "quartic/poly_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "quartic/error.hpp"

namespace quartic {

char const* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput: return "invalid-input";
    case ErrorKind::kNotReducible: return "not-reducible";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kWrongPath: return "wrong-path";
    case ErrorKind::kInternalLogic: return "internal-logic";
    case ErrorKind::kOracleFailure: return "oracle-failure";
  }
  return "unknown";
}

bool DepressedQuartic::is_finite() const {
  return std::isfinite(m) && std::isfinite(p) && std::isfinite(q) &&
         std::isfinite(shift);
}

void require_finite(DepressedQuartic const& P) {
  if (!P.is_finite()) {
    throw Error(ErrorKind::kInvalidInput,
                "depressed quartic has a non-finite coefficient");
  }
}

DepressedQuartic depress(GeneralQuartic const& g) {
  if (!(std::isfinite(g.a3) && std::isfinite(g.a2) && std::isfinite(g.a1) &&
        std::isfinite(g.a0))) {
    throw Error(ErrorKind::kInvalidInput,
                "quartic has a non-finite coefficient");
  }
  double const s = g.a3;
  double const s2 = s * s;
  DepressedQuartic P;
  P.m = g.a2 - 3.0 * s2 / 8.0;
  P.p = g.a1 - g.a2 * s / 2.0 + s2 * s / 8.0;
  P.q = g.a0 - g.a1 * s / 4.0 + g.a2 * s2 / 16.0 - 3.0 * s2 * s2 / 256.0;
  P.shift = s / 4.0;
  return P;
}

double eval_quartic(DepressedQuartic const& P, double t) {
  if (!std::isfinite(t)) {
    throw Error(ErrorKind::kInvalidInput, "evaluation point is not finite");
  }
  return ((t * t + P.m) * t + P.p) * t + P.q;
}

double eval_quartic_derivative(DepressedQuartic const& P, double t) {
  return (4.0 * t * t + 2.0 * P.m) * t + P.p;
}

double cauchy_root_bound(DepressedQuartic const& P) {
  return 1.0 + std::max({std::abs(P.m), std::abs(P.p), std::abs(P.q)});
}

}  // namespace quartic
