#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "quartic/segment_analysis.hpp"
#include "quartic/simd/kernels.hpp"

namespace quartic::testing {

double eval_general_by_powers(GeneralQuartic const& g, double z) {
  return std::pow(z, 4) + g.a3 * std::pow(z, 3) + g.a2 * z * z + g.a1 * z +
         g.a0;
}

int scan_zero_crossings(TrigParams const& tp, std::size_t n) {
  auto const angles = simd::make_angle_table(n);
  auto const values = simd::sample_reduced(tp, angles);
  return static_cast<int>(simd::count_sign_changes(values));
}

int scan_critical_cubic(double a, double step) {
  auto const n = static_cast<std::size_t>(std::llround(2.0 / step)) + 1;
  std::vector<double> x(n), residual(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -1.0 + static_cast<double>(i) * step;
  x.back() = 1.0;
  simd::eval_critical_residual_batch(a, x, residual);
  return static_cast<int>(simd::count_sign_changes(residual));
}

double min_abs_f_at_critical(TrigParams const& tp) {
  double best = std::min(std::abs(eval_f(tp, 0.0)),
                         std::abs(eval_f(tp, std::numbers::pi)));
  for (double theta : solve_critical_cubic(tp.a).thetas) {
    best = std::min(best, std::abs(eval_f(tp, theta)));
  }
  return best;
}

}  // namespace quartic::testing
