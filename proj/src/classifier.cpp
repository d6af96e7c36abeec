#include "quartic/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quartic/bisection.hpp"
#include "quartic/error.hpp"

namespace quartic {

char const* to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::kAllComplex: return "AllComplex";
    case CaseLabel::kTwoRealA: return "TwoReal_a";
    case CaseLabel::kTwoRealB: return "TwoReal_b";
    case CaseLabel::kTwoRealC: return "TwoReal_c";
    case CaseLabel::kTwoRealExteriorPair: return "TwoReal_exterior_pair";
    case CaseLabel::kFourReal: return "FourReal";
    case CaseLabel::kMNonNegConvex: return "MNonNegConvex";
    case CaseLabel::kDegenerate: return "Degenerate";
  }
  return "unknown";
}

char const* to_string(RootOrigin origin) {
  switch (origin) {
    case RootOrigin::kInterior: return "interior";
    case RootOrigin::kExterior: return "exterior";
    case RootOrigin::kConvexPath: return "convex_path";
  }
  return "unknown";
}

namespace {

RealRoot make_root(DepressedQuartic const& P, double t, int multiplicity,
                   RootOrigin origin) {
  return {t, P.to_original(t), multiplicity, origin};
}

void sort_roots(std::vector<RealRoot>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](RealRoot const& l, RealRoot const& r) { return l.t < r.t; });
}

// Shared tail of the m < 0 routes: totals and the theorem case.
void finish_trig_classification(Classification& c) {
  c.n_real_distinct = c.n_int + c.n_ext;
  c.n_real_multiplicity = 0;
  for (auto const& r : c.roots) c.n_real_multiplicity += r.multiplicity;
  auto const& tp = *c.trig;
  c.sufficient_all_complex = tp.b > std::abs(tp.a) + 1.0;
  c.sufficient_two_real_outside = tp.b < -(std::abs(tp.a) + 1.0);
  sort_roots(c.roots);

  if (!c.diagnostics.empty()) {
    c.case_label = CaseLabel::kDegenerate;
    return;
  }
  switch (c.n_real_distinct) {
    case 0:
      c.case_label = CaseLabel::kAllComplex;
      return;
    case 2:
      if (c.n_int == 0 && c.boundary->at_zero < 0.0 && c.boundary->at_pi < 0.0) {
        c.case_label = CaseLabel::kTwoRealA;
      } else if (c.n_int == 0) {
        c.case_label = CaseLabel::kTwoRealExteriorPair;
      } else if (c.n_int == 2) {
        c.case_label = CaseLabel::kTwoRealB;
      } else {
        c.case_label = CaseLabel::kTwoRealC;
      }
      return;
    case 4:
      c.case_label = CaseLabel::kFourReal;
      return;
    default:
      c.diagnostics.push_back({"n_real parity",
                               static_cast<double>(c.n_real_distinct), 0.0});
      c.case_label = CaseLabel::kDegenerate;
  }
}

// Exterior roots on one side. P is convex beyond +-u, so with P(+-u) < 0
// there is exactly one root; with P(+-u) >= 0 there are none unless P still
// heads downward at +-u (a < -16 on the right, a > 16 on the left), in which
// case its minimum out there decides between zero, a double root and two.
int add_exterior_roots(Classification& c, Side side, double f_boundary,
                       double tau_sign, double tau_tangent) {
  auto const& P = c.quartic;
  if (f_boundary < -tau_sign) {
    c.roots.push_back(make_root(P, find_exterior_root(P, side), 1,
                                RootOrigin::kExterior));
    return 1;
  }
  double const dir = side == Side::kRight ? 1.0 : -1.0;
  double const inner = dir * c.trig->u;
  if (dir * eval_quartic_derivative(P, inner) >= 0.0) return 0;

  double const outer = dir * cauchy_root_bound(P);
  auto dP = [&P](double t) { return eval_quartic_derivative(P, t); };
  auto g = [&P](double t) { return eval_quartic(P, t); };
  double const lo = std::min(inner, outer), hi = std::max(inner, outer);
  double const t_min = bisect(dP, lo, hi, dP(lo), dP(hi));
  double const p_min = eval_quartic(P, t_min);
  double const f_min = 8.0 * p_min / (P.m * P.m);
  if (f_min > tau_tangent) return 0;
  if (f_min >= -tau_tangent) {
    c.diagnostics.push_back({side == Side::kRight ? "f(t_ext) right" : "f(t_ext) left",
                             f_min, tau_tangent});
    c.roots.push_back(make_root(P, t_min, 2, RootOrigin::kExterior));
    return 1;
  }

  auto root_between = [&](double x, double y) {
    double const l = std::min(x, y), h = std::max(x, y);
    return bisect(g, l, h, g(l), g(h));
  };
  c.roots.push_back(make_root(P, root_between(t_min, outer), 1, RootOrigin::kExterior));
  // A root at +-u itself is already an interior boundary zero.
  if (f_boundary <= tau_sign) return 1;
  c.roots.push_back(make_root(P, root_between(inner, t_min), 1, RootOrigin::kExterior));
  return 2;
}

// Scale of the rounding error in a Horner evaluation of P at t.
double evaluation_scale(DepressedQuartic const& P, double t) {
  double const t2 = t * t;
  return 1.0 + t2 * t2 + std::abs(P.m) * t2 + std::abs(P.p * t) +
         std::abs(P.q);
}

}  // namespace

double find_exterior_root(DepressedQuartic const& P, Side side) {
  require_finite(P);
  if (!(P.m < 0.0)) {
    throw Error(ErrorKind::kInvalidInput,
                "exterior roots are defined only for m < 0");
  }
  double const u = std::sqrt(-P.m);
  double const bound = cauchy_root_bound(P);
  double const inner = side == Side::kRight ? u : -u;
  double const outer = side == Side::kRight ? bound : -bound;
  double const p_inner = eval_quartic(P, inner);
  double const p_outer = eval_quartic(P, outer);
  if (!(p_inner < 0.0 && p_outer > 0.0)) {
    throw Error(ErrorKind::kInternalLogic,
                "exterior bracket has no sign change");
  }
  auto g = [&P](double t) { return eval_quartic(P, t); };
  return side == Side::kRight ? bisect(g, inner, outer, p_inner, p_outer)
                              : bisect(g, outer, inner, p_outer, p_inner);
}

Classification classify(DepressedQuartic const& P, Tolerances const& tol) {
  require_finite(P);
  if (!(P.m < 0.0)) return classify_m_nonneg(P, tol);

  Classification c;
  c.quartic = P;
  TrigParams const tp = reduce(P);
  BoundaryValues const bv = boundary_values(tp);
  c.trig = tp;
  c.boundary = bv;

  double const tau_sign = tol.sign(tp.a, tp.b);
  double const tau_tangent = tol.tangent(tp.a, tp.b);

  CriticalSet const crit = solve_critical_cubic(tp.a);
  auto const segs = decompose(tp, crit);
  InteriorZeroReport const zeros = count_interior_zeros(tp, segs, tol);

  if (std::abs(bv.at_zero) <= tau_sign) {
    c.diagnostics.push_back({"f(0)", bv.at_zero, tau_sign});
  }
  if (std::abs(bv.at_pi) <= tau_sign) {
    c.diagnostics.push_back({"f(pi)", bv.at_pi, tau_sign});
  }
  for (std::size_t i = 1; i < segs.size(); ++i) {
    if (std::abs(segs[i].f_lo) <= tau_tangent) {
      c.diagnostics.push_back({"f(theta_c)", segs[i].f_lo, tau_tangent});
    }
  }

  c.n_int = zeros.count();
  c.n_int_multiplicity = zeros.multiplicity_count();
  for (auto const& z : zeros.zeros) {
    c.roots.push_back(make_root(P, tp.u * std::cos(z.theta), z.multiplicity,
                                RootOrigin::kInterior));
  }

  // Strict negativity: a root sitting at t = +-u belongs to the interior.
  c.n_ext = add_exterior_roots(c, Side::kRight, bv.at_zero, tau_sign, tau_tangent) +
            add_exterior_roots(c, Side::kLeft, bv.at_pi, tau_sign, tau_tangent);

  finish_trig_classification(c);
  return c;
}

Classification classify_m_nonneg(DepressedQuartic const& P,
                                 Tolerances const& tol) {
  require_finite(P);
  if (P.m < 0.0) {
    throw Error(ErrorKind::kWrongPath,
                "convex path requires m >= 0; use the trigonometric path");
  }
  Classification c;
  c.quartic = P;
  c.case_label = CaseLabel::kMNonNegConvex;

  // Cauchy bound of P'/4 = t^3 + (m/2) t + p/4.
  double const d_bound =
      1.0 + std::max(std::abs(P.m) / 2.0, std::abs(P.p) / 4.0);
  auto dP = [&P](double t) { return eval_quartic_derivative(P, t); };
  double const t_min =
      bisect(dP, -d_bound, d_bound, dP(-d_bound), dP(d_bound));
  double const p_min = eval_quartic(P, t_min);
  double const tau = tol.sign_rel * tol.scale * evaluation_scale(P, t_min);

  if (p_min > tau) return c;

  if (p_min < -tau) {
    double const bound = cauchy_root_bound(P);
    auto g = [&P](double t) { return eval_quartic(P, t); };
    double const left =
        bisect(g, -bound, t_min, eval_quartic(P, -bound), p_min);
    double const right = bisect(g, t_min, bound, p_min, eval_quartic(P, bound));
    c.roots.push_back(make_root(P, left, 1, RootOrigin::kConvexPath));
    c.roots.push_back(make_root(P, right, 1, RootOrigin::kConvexPath));
    c.n_real_distinct = 2;
    c.n_real_multiplicity = 2;
    return c;
  }

  // The minimum touches zero. P''(t*) = 12 t*^2 + 2m vanishes only for t^4.
  double const curvature = 12.0 * t_min * t_min + 2.0 * P.m;
  int const multiplicity =
      std::abs(curvature) <= tol.tangent_rel * tol.scale * (1.0 + P.m) ? 4 : 2;
  c.roots.push_back(
      make_root(P, t_min, multiplicity, RootOrigin::kConvexPath));
  c.n_real_distinct = 1;
  c.n_real_multiplicity = multiplicity;
  c.diagnostics.push_back({"P(t*)", p_min, tau});
  c.case_label = CaseLabel::kDegenerate;
  return c;
}

Classification classify_biquadratic(DepressedQuartic const& P,
                                    Tolerances const& tol) {
  require_finite(P);
  if (P.p != 0.0) {
    throw Error(ErrorKind::kWrongPath, "biquadratic path requires p == 0");
  }

  Classification c;
  c.quartic = P;

  if (P.m >= 0.0) {
    // Quadratic in s = t^2 with both roots s <= 0 unless q < 0.
    c.case_label = CaseLabel::kMNonNegConvex;
    double const tau = tol.sign_rel * tol.scale * (1.0 + std::abs(P.q));
    if (P.q > tau) return c;
    if (P.q < -tau) {
      double const s = 0.5 * (-P.m + std::sqrt(P.m * P.m - 4.0 * P.q));
      double const r = std::sqrt(s);
      c.roots.push_back(make_root(P, -r, 1, RootOrigin::kConvexPath));
      c.roots.push_back(make_root(P, r, 1, RootOrigin::kConvexPath));
      c.n_real_distinct = 2;
      c.n_real_multiplicity = 2;
      return c;
    }
    int const multiplicity =
        2.0 * P.m <= tol.tangent_rel * tol.scale * (1.0 + P.m) ? 4 : 2;
    c.roots.push_back(make_root(P, 0.0, multiplicity, RootOrigin::kConvexPath));
    c.n_real_distinct = 1;
    c.n_real_multiplicity = multiplicity;
    c.diagnostics.push_back({"P(t*)", P.q, tau});
    c.case_label = CaseLabel::kDegenerate;
    return c;
  }

  TrigParams const tp = reduce(P);
  c.trig = tp;
  c.boundary = boundary_values(tp);
  double const tau_sign = tol.sign(tp.a, tp.b);
  double const tau_tangent = tol.tangent(tp.a, tp.b);
  double const pi = std::numbers::pi;

  // f = cos(4 theta) + b. f(0) = f(pi) = f(pi/2) = 1 + b and
  // f(pi/4) = f(3 pi/4) = b - 1.
  double const low = 1.0 + tp.b;
  double const high = tp.b - 1.0;

  struct Zero {
    double theta;
    int multiplicity;
  };
  std::vector<Zero> zeros;

  if (std::abs(low) <= tau_sign) {
    // q = 0: boundary zeros at 0 and pi, double root t = 0.
    c.diagnostics.push_back({"f(0)", low, tau_sign});
    c.diagnostics.push_back({"f(pi)", low, tau_sign});
    c.diagnostics.push_back({"f(theta_c)", low, tau_tangent});
    zeros = {{0.0, 1}, {pi / 2.0, 2}, {pi, 1}};
  } else if (std::abs(high) <= tau_tangent) {
    // q = m^2/4: zeros merge pairwise.
    c.diagnostics.push_back({"f(theta_c)", high, tau_tangent});
    c.diagnostics.push_back({"f(theta_c)", high, tau_tangent});
    zeros = {{pi / 4.0, 2}, {3.0 * pi / 4.0, 2}};
  } else {
    bool const touches_middle = std::abs(low) <= tau_tangent;
    if (touches_middle) {
      c.diagnostics.push_back({"f(theta_c)", low, tau_tangent});
      zeros.push_back({pi / 2.0, 2});
    }
    if (std::abs(tp.b) < 1.0) {
      // cos(4 theta) = -b on [0, pi]: 4 theta in {phi, 2pi - phi, 2pi + phi,
      // 4pi - phi}; the middle pair is absorbed by a tangency at pi/2.
      double const phi = std::acos(-tp.b);
      zeros.push_back({phi / 4.0, 1});
      if (!touches_middle) {
        zeros.push_back({(2.0 * pi - phi) / 4.0, 1});
        zeros.push_back({(2.0 * pi + phi) / 4.0, 1});
      }
      zeros.push_back({(4.0 * pi - phi) / 4.0, 1});
    }
  }

  for (auto const& z : zeros) {
    c.n_int += 1;
    c.n_int_multiplicity += z.multiplicity;
    c.roots.push_back(make_root(P, tp.u * std::cos(z.theta), z.multiplicity,
                                RootOrigin::kInterior));
  }

  if (low < -tau_sign) {
    // Exterior pair t = +-sqrt(s) with s the positive root of s^2 + ms + q.
    double const s = 0.5 * (-P.m + std::sqrt(P.m * P.m - 4.0 * P.q));
    double const r = std::sqrt(s);
    c.n_ext = 2;
    c.roots.push_back(make_root(P, -r, 1, RootOrigin::kExterior));
    c.roots.push_back(make_root(P, r, 1, RootOrigin::kExterior));
  }

  finish_trig_classification(c);
  return c;
}

}  // namespace quartic
