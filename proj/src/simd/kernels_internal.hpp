#pragma once

// Raw-pointer entry points for each instruction set. The vector translation
// units include only this header so that nothing inline is compiled with
// wider ISA flags than the rest of the library.

#include <cstddef>

namespace quartic::simd::scalar {
void eval_quartic(double m, double p, double q, double const* t, double* out,
                  std::size_t n);
void eval_reduced(double a, double b, double const* c1, double const* c4,
                  double* out, std::size_t n);
void eval_critical_cubic(double offset, double const* x, double* out,
                         std::size_t n);
std::size_t count_sign_changes(double const* v, std::size_t n);
}  // namespace quartic::simd::scalar

namespace quartic::simd::avx2 {
void eval_quartic(double m, double p, double q, double const* t, double* out,
                  std::size_t n);
void eval_reduced(double a, double b, double const* c1, double const* c4,
                  double* out, std::size_t n);
void eval_critical_cubic(double offset, double const* x, double* out,
                         std::size_t n);
std::size_t count_sign_changes(double const* v, std::size_t n);
}  // namespace quartic::simd::avx2

namespace quartic::simd::neon {
void eval_quartic(double m, double p, double q, double const* t, double* out,
                  std::size_t n);
void eval_reduced(double a, double b, double const* c1, double const* c4,
                  double* out, std::size_t n);
void eval_critical_cubic(double offset, double const* x, double* out,
                         std::size_t n);
std::size_t count_sign_changes(double const* v, std::size_t n);
}  // namespace quartic::simd::neon
