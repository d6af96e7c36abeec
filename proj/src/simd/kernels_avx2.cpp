#include <immintrin.h>

#include "kernels_internal.hpp"

namespace quartic::simd::avx2 {

namespace {
constexpr std::size_t kWidth = 4;
}  // namespace

void eval_quartic(double m, double p, double q, double const* t, double* out,
                  std::size_t n) {
  __m256d const vm = _mm256_set1_pd(m);
  __m256d const vp = _mm256_set1_pd(p);
  __m256d const vq = _mm256_set1_pd(q);
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    __m256d const x = _mm256_loadu_pd(t + i);
    __m256d r = _mm256_add_pd(_mm256_mul_pd(x, x), vm);
    r = _mm256_add_pd(_mm256_mul_pd(r, x), vp);
    r = _mm256_add_pd(_mm256_mul_pd(r, x), vq);
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) {
    double const x = t[i];
    out[i] = ((x * x + m) * x + p) * x + q;
  }
}

void eval_reduced(double a, double b, double const* c1, double const* c4,
                  double* out, std::size_t n) {
  __m256d const va = _mm256_set1_pd(a);
  __m256d const vb = _mm256_set1_pd(b);
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    __m256d r = _mm256_mul_pd(va, _mm256_loadu_pd(c1 + i));
    r = _mm256_add_pd(r, _mm256_loadu_pd(c4 + i));
    r = _mm256_add_pd(r, vb);
    _mm256_storeu_pd(out + i, r);
  }
  for (; i < n; ++i) out[i] = a * c1[i] + c4[i] + b;
}

void eval_critical_cubic(double offset, double const* x, double* out,
                         std::size_t n) {
  __m256d const two = _mm256_set1_pd(2.0);
  __m256d const one = _mm256_set1_pd(1.0);
  __m256d const off = _mm256_set1_pd(offset);
  std::size_t i = 0;
  for (; i + kWidth <= n; i += kWidth) {
    __m256d const v = _mm256_loadu_pd(x + i);
    __m256d inner = _mm256_mul_pd(_mm256_mul_pd(two, v), v);
    inner = _mm256_sub_pd(inner, one);
    _mm256_storeu_pd(out + i, _mm256_add_pd(_mm256_mul_pd(v, inner), off));
  }
  for (; i < n; ++i) {
    double const v = x[i];
    out[i] = v * (2.0 * v * v - 1.0) + offset;
  }
}

std::size_t count_sign_changes(double const* v, std::size_t n) {
  if (n < 2) return 0;
  __m256d const zero = _mm256_setzero_pd();
  std::size_t changes = 0;
  std::size_t i = 0;
  // Compare v[i..i+3] against v[i+1..i+4].
  for (; i + kWidth + 1 <= n; i += kWidth) {
    __m256d const here = _mm256_cmp_pd(_mm256_loadu_pd(v + i), zero, _CMP_LT_OQ);
    __m256d const next =
        _mm256_cmp_pd(_mm256_loadu_pd(v + i + 1), zero, _CMP_LT_OQ);
    int const mask = _mm256_movemask_pd(_mm256_xor_pd(here, next));
    changes += static_cast<std::size_t>(__builtin_popcount(mask));
  }
  for (; i + 1 < n; ++i) changes += (v[i] < 0.0) != (v[i + 1] < 0.0);
  return changes;
}

}  // namespace quartic::simd::avx2
