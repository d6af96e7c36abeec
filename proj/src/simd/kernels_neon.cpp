#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace quartic::simd::neon {

namespace {
constexpr std::size_t kWidth = 2;
}  // namespace

// vmulq/vaddq only: vfmaq would round differently from the scalar table.
void eval_quartic(double m, double p, double q, double const* t, double* out,
                  std::size_t n) {
  float64x2_t const vm = vdupq_n_f64(m);
  float64x2_t const vp = vdupq_n_f64(p);
  float64x2_t const vq = vdupq_n_f64(q);
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    float64x2_t const x = vld1q_f64(t + i);
    float64x2_t r = vaddq_f64(vmulq_f64(x, x), vm);
    r = vaddq_f64(vmulq_f64(r, x), vp);
    r = vaddq_f64(vmulq_f64(r, x), vq);
    vst1q_f64(out + i, r);
  }
  for (; i < n; ++i) {
    double const x = t[i];
    out[i] = ((x * x + m) * x + p) * x + q;
  }
}

void eval_reduced(double a, double b, double const* c1, double const* c4,
                  double* out, std::size_t n) {
  float64x2_t const va = vdupq_n_f64(a);
  float64x2_t const vb = vdupq_n_f64(b);
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    float64x2_t r = vmulq_f64(va, vld1q_f64(c1 + i));
    r = vaddq_f64(r, vld1q_f64(c4 + i));
    vst1q_f64(out + i, vaddq_f64(r, vb));
  }
  for (; i < n; ++i) out[i] = a * c1[i] + c4[i] + b;
}

void eval_critical_cubic(double offset, double const* x, double* out,
                         std::size_t n) {
  float64x2_t const two = vdupq_n_f64(2.0);
  float64x2_t const one = vdupq_n_f64(1.0);
  float64x2_t const off = vdupq_n_f64(offset);
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    float64x2_t const v = vld1q_f64(x + i);
    float64x2_t inner = vsubq_f64(vmulq_f64(vmulq_f64(two, v), v), one);
    vst1q_f64(out + i, vaddq_f64(vmulq_f64(v, inner), off));
  }
  for (; i < n; ++i) {
    double const v = x[i];
    out[i] = v * (2.0 * v * v - 1.0) + offset;
  }
}

std::size_t count_sign_changes(double const* v, std::size_t n) {
  if (n < 2) return 0;
  float64x2_t const zero = vdupq_n_f64(0.0);
  std::size_t changes = 0;
  std::size_t i = 0;
  for (; i + kWidth + 1 <= n; i += kWidth) {
    uint64x2_t const here = vcltq_f64(vld1q_f64(v + i), zero);
    uint64x2_t const next = vcltq_f64(vld1q_f64(v + i + 1), zero);
    uint64x2_t const diff = vshrq_n_u64(veorq_u64(here, next), 63);
    changes += static_cast<std::size_t>(vaddvq_u64(diff));
  }
  for (; i + 1 < n; ++i) changes += (v[i] < 0.0) != (v[i + 1] < 0.0);
  return changes;
}

}  // namespace quartic::simd::neon
