#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quartic/poly_core.hpp"
#include "quartic/segment_analysis.hpp"
#include "quartic/tolerance.hpp"
#include "quartic/trig_reduction.hpp"

namespace quartic {

enum class CaseLabel {
  kAllComplex,     // no real roots, f > 0 on [0, pi]
  kTwoRealA,       // f < 0 on [0, pi]; one root on each side of [-u, u]
  kTwoRealB,       // two interior zeros, no exterior roots
  kTwoRealC,       // one interior zero, one exterior root
  // f > 0 on [0, pi] yet P dips below zero beyond u (a < -16) or -u (a > 16)
  kTwoRealExteriorPair,
  kFourReal,
  kMNonNegConvex,  // m >= 0: P globally convex
  kDegenerate,
};

char const* to_string(CaseLabel label);

enum class RootOrigin { kInterior, kExterior, kConvexPath };

char const* to_string(RootOrigin origin);

enum class Side { kLeft, kRight };

struct RealRoot {
  double t = 0.0;  // depressed coordinate
  double z = 0.0;  // original coordinate, t - shift
  int multiplicity = 1;
  RootOrigin origin = RootOrigin::kInterior;
};

// A decisive quantity that landed within its tolerance of zero.
struct Diagnostic {
  std::string quantity;
  double value = 0.0;
  double tolerance = 0.0;
};

struct Classification {
  DepressedQuartic quartic;
  std::optional<TrigParams> trig;  // absent on the m >= 0 path
  std::optional<BoundaryValues> boundary;

  int n_int = 0;               // distinct zeros of f on [0, pi]
  int n_int_multiplicity = 0;  // tangent zeros counted with multiplicity
  int n_ext = 0;
  int n_real_distinct = 0;
  int n_real_multiplicity = 0;

  CaseLabel case_label = CaseLabel::kDegenerate;
  // b > |a| + 1 and b < -(|a| + 1) respectively.
  bool sufficient_all_complex = false;
  bool sufficient_two_real_outside = false;

  std::vector<RealRoot> roots;  // ascending in t
  std::vector<Diagnostic> diagnostics;

  bool degenerate() const { return case_label == CaseLabel::kDegenerate; }
};

Classification classify(DepressedQuartic const& P, Tolerances const& tol = {});

// Root of P in (u, B] (right) or [-B, -u) (left) when P(+-u) < 0 on that
// side. Requires m < 0; throws kInternalLogic when the bracket has no sign
// change.
double find_exterior_root(DepressedQuartic const& P, Side side);

// m >= 0: P' is strictly increasing, so P has one minimum t* and at most
// two real roots. Throws kWrongPath for m < 0.
Classification classify_m_nonneg(DepressedQuartic const& P,
                                 Tolerances const& tol = {});

// Closed-form route for p == 0, where f(theta) = cos(4 theta) + b. Kept
// independent of the segment machinery so it can cross-check classify.
// Throws kWrongPath for p != 0.
Classification classify_biquadratic(DepressedQuartic const& P,
                                    Tolerances const& tol = {});

}  // namespace quartic
