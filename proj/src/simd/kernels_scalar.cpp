#include "kernels_internal.hpp"

namespace quartic::simd::scalar {

void eval_quartic(double m, double p, double q, double const* t, double* out,
                  std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double const x = t[i];
    out[i] = ((x * x + m) * x + p) * x + q;
  }
}

void eval_reduced(double a, double b, double const* c1, double const* c4,
                  double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a * c1[i] + c4[i] + b;
}

void eval_critical_cubic(double offset, double const* x, double* out,
                         std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double const v = x[i];
    out[i] = v * (2.0 * v * v - 1.0) + offset;
  }
}

std::size_t count_sign_changes(double const* v, std::size_t n) {
  std::size_t changes = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    changes += (v[i] < 0.0) != (v[i + 1] < 0.0);
  }
  return changes;
}

}  // namespace quartic::simd::scalar
