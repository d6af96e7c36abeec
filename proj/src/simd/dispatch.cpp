#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string_view>

#include "kernels_internal.hpp"
#include "quartic/error.hpp"
#include "quartic/simd/kernels.hpp"

namespace quartic::simd {

namespace {

KernelTable const kScalar{Isa::kScalar, &scalar::eval_quartic,
                          &scalar::eval_reduced, &scalar::eval_critical_cubic,
                          &scalar::count_sign_changes};

#if defined(QUARTIC_HAVE_AVX2)
KernelTable const kAvx2{Isa::kAvx2, &avx2::eval_quartic, &avx2::eval_reduced,
                        &avx2::eval_critical_cubic, &avx2::count_sign_changes};
#endif

#if defined(QUARTIC_HAVE_NEON)
KernelTable const kNeon{Isa::kNeon, &neon::eval_quartic, &neon::eval_reduced,
                        &neon::eval_critical_cubic, &neon::count_sign_changes};
#endif

KernelTable const& select() {
  char const* forced = std::getenv("QUARTIC_SIMD");
  if (forced != nullptr && std::string_view(forced) == "scalar") {
    return kScalar;
  }
  if (auto const* k = avx2_kernels()) return *k;
  if (auto const* k = neon_kernels()) return *k;
  return kScalar;
}

void check_sizes(std::size_t in, std::size_t out) {
  if (in != out) {
    throw Error(ErrorKind::kInvalidInput, "batch input and output sizes differ");
  }
}

}  // namespace

char const* to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar: return "scalar";
    case Isa::kAvx2: return "avx2";
    case Isa::kNeon: return "neon";
  }
  return "unknown";
}

KernelTable const& scalar_kernels() { return kScalar; }

KernelTable const* avx2_kernels() {
#if defined(QUARTIC_HAVE_AVX2)
  static bool const supported = __builtin_cpu_supports("avx2");
  return supported ? &kAvx2 : nullptr;
#else
  return nullptr;
#endif
}

KernelTable const* neon_kernels() {
#if defined(QUARTIC_HAVE_NEON)
  return &kNeon;
#else
  return nullptr;
#endif
}

KernelTable const& active_kernels() {
  static KernelTable const& chosen = select();
  return chosen;
}

std::vector<KernelTable const*> available_kernels() {
  std::vector<KernelTable const*> out{&kScalar};
  if (auto const* k = avx2_kernels()) out.push_back(k);
  if (auto const* k = neon_kernels()) out.push_back(k);
  return out;
}

void eval_quartic_batch(DepressedQuartic const& P, std::span<double const> t,
                        std::span<double> out, KernelTable const& k) {
  check_sizes(t.size(), out.size());
  k.eval_quartic(P.m, P.p, P.q, t.data(), out.data(), t.size());
}

void eval_reduced_batch(TrigParams const& tp,
                        std::span<double const> cos_theta,
                        std::span<double const> cos_4theta,
                        std::span<double> out, KernelTable const& k) {
  check_sizes(cos_theta.size(), out.size());
  check_sizes(cos_4theta.size(), out.size());
  k.eval_reduced(tp.a, tp.b, cos_theta.data(), cos_4theta.data(), out.data(),
                 out.size());
}

void eval_critical_residual_batch(double a, std::span<double const> x,
                                  std::span<double> out, KernelTable const& k) {
  check_sizes(x.size(), out.size());
  k.eval_critical_cubic(a / 16.0, x.data(), out.data(), x.size());
}

std::size_t count_sign_changes(std::span<double const> v,
                               KernelTable const& k) {
  return k.count_sign_changes(v.data(), v.size());
}

std::vector<double> angle_grid(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidInput, "angle grid needs at least 2 points");
  }
  std::vector<double> theta(n);
  double const step = std::numbers::pi / static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    theta[i] = static_cast<double>(i) * step;
  }
  theta[n - 1] = std::numbers::pi;
  return theta;
}

AngleTable make_angle_table(std::size_t n) {
  AngleTable table;
  table.theta = angle_grid(n);
  table.cos_theta.resize(n);
  table.cos_4theta.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    table.cos_theta[i] = std::cos(table.theta[i]);
    table.cos_4theta[i] = std::cos(4.0 * table.theta[i]);
  }
  return table;
}

std::vector<double> sample_reduced(TrigParams const& tp,
                                   AngleTable const& angles,
                                   KernelTable const& k) {
  std::vector<double> out(angles.theta.size());
  eval_reduced_batch(tp, angles.cos_theta, angles.cos_4theta, out, k);
  return out;
}

}  // namespace quartic::simd
