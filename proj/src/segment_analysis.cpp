#include "quartic/segment_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "quartic/bisection.hpp"
#include "quartic/error.hpp"

namespace quartic {

namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

double critical_cubic(double x) { return x * (2.0 * x * x - 1.0); }

int InteriorZeroReport::multiplicity_count() const {
  int total = 0;
  for (auto const& z : zeros) total += z.multiplicity;
  return total;
}

bool InteriorZeroReport::any_tangent() const {
  return std::any_of(zeros.begin(), zeros.end(),
                     [](InteriorZero const& z) { return z.tangent; });
}

CriticalSet solve_critical_cubic(double a) {
  CriticalSet out;
  double const target = -a / 16.0;
  if (!(target > -1.0 && target < 1.0)) return out;

  // h rises on [-1, -k], falls on [-k, k], rises on [k, 1].
  double const k = 1.0 / std::sqrt(6.0);
  double const h_max = critical_cubic(-k);
  double const h_min = critical_cubic(k);
  auto g = [target](double x) { return critical_cubic(x) - target; };

  // Each breakpoint belongs to exactly one piece: (-1, -k], (-k, k], (k, 1).
  if (target <= h_max) {
    double const x = bisect(g, -1.0, -k, g(-1.0), g(-k));
    if (x > -1.0) out.xs.push_back(x);
  }
  if (target >= h_min && target < h_max) {
    double const x = bisect(g, -k, k, g(-k), g(k));
    if (x != -k) out.xs.push_back(x);
  }
  if (target > h_min) {
    double const x = bisect(g, k, 1.0, g(k), g(1.0));
    if (x != k && x < 1.0) out.xs.push_back(x);
  }

  std::sort(out.xs.begin(), out.xs.end());
  out.xs.erase(std::unique(out.xs.begin(), out.xs.end()), out.xs.end());
  for (auto it = out.xs.rbegin(); it != out.xs.rend(); ++it) {
    out.thetas.push_back(std::acos(*it));
  }
  return out;
}

std::vector<MonotoneSegment> decompose(TrigParams const& tp,
                                       CriticalSet const& crit) {
  std::vector<double> cuts{0.0};
  for (double theta : crit.thetas) {
    if (theta > cuts.back() && theta < std::numbers::pi) cuts.push_back(theta);
  }
  cuts.push_back(std::numbers::pi);

  std::vector<MonotoneSegment> segs;
  segs.reserve(cuts.size() - 1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    MonotoneSegment s;
    s.lo = cuts[i];
    s.hi = cuts[i + 1];
    s.f_lo = eval_f(tp, s.lo);
    s.f_hi = eval_f(tp, s.hi);
    s.direction = sign_of(eval_f_prime(tp, s.lo + 0.5 * (s.hi - s.lo)));
    if (s.direction == 0) s.direction = sign_of(s.f_hi - s.f_lo);
    if (s.direction == 0) {
      throw Error(ErrorKind::kInternalLogic,
                  "f is constant on a monotone segment");
    }
    segs.push_back(s);
  }
  return segs;
}

InteriorZeroReport count_interior_zeros(
    TrigParams const& tp, std::vector<MonotoneSegment> const& segs,
    Tolerances const& tol) {
  InteriorZeroReport report;
  if (segs.empty()) return report;

  double const tau_sign = tol.sign(tp.a, tp.b);
  double const tau_tangent = tol.tangent(tp.a, tp.b);

  // Segment endpoints in order: 0, interior critical angles, pi.
  std::size_t const n = segs.size() + 1;
  std::vector<double> theta(n), value(n);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    theta[i] = segs[i].lo;
    value[i] = segs[i].f_lo;
  }
  theta[n - 1] = segs.back().hi;
  value[n - 1] = segs.back().f_hi;

  std::vector<bool> is_zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool const boundary = i == 0 || i == n - 1;
    is_zero[i] = std::abs(value[i]) <= (boundary ? tau_sign : tau_tangent);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!is_zero[i]) continue;
    InteriorZero z;
    z.theta = theta[i];
    if (i == 0 || i == n - 1) {
      // f'(0) = f'(pi) = 0 always; f'' decides whether P' vanishes at +-u.
      z.site = ZeroSite::kBoundary;
      z.tangent = std::abs(eval_f_second(tp, theta[i])) <= tau_tangent;
      z.multiplicity = z.tangent ? 2 : 1;
    } else {
      z.site = ZeroSite::kCritical;
      z.tangent = true;
      bool const crosses = !is_zero[i - 1] && !is_zero[i + 1] &&
                           sign_of(value[i - 1]) * sign_of(value[i + 1]) < 0;
      z.multiplicity = crosses ? 3 : 2;
    }
    report.zeros.push_back(z);
  }

  auto f = [&tp](double t) { return eval_f(tp, t); };
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (is_zero[i] || is_zero[i + 1]) continue;
    if (sign_of(value[i]) * sign_of(value[i + 1]) >= 0) continue;
    InteriorZero z;
    z.theta = bisect(f, theta[i], theta[i + 1], value[i], value[i + 1],
                     tol.theta_step());
    report.zeros.push_back(z);
  }

  std::sort(report.zeros.begin(), report.zeros.end(),
            [](InteriorZero const& l, InteriorZero const& r) {
              return l.theta < r.theta;
            });
  return report;
}

}  // namespace quartic
