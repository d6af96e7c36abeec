#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "quartic/poly_core.hpp"
#include "quartic/trig_reduction.hpp"

// Batched arithmetic over grids of points. Each instruction set provides the
// same table; every variant performs the same operations in the same order
// without contraction, so results are bitwise identical to the scalar table.
namespace quartic::simd {

enum class Isa { kScalar, kAvx2, kNeon };

char const* to_string(Isa isa);

struct KernelTable {
  Isa isa;
  // out[i] = ((t^2 + m) t + p) t + q
  void (*eval_quartic)(double m, double p, double q, double const* t,
                       double* out, std::size_t n);
  // out[i] = a cos_theta[i] + cos_4theta[i] + b
  void (*eval_reduced)(double a, double b, double const* cos_theta,
                       double const* cos_4theta, double* out, std::size_t n);
  // out[i] = x (2x^2 - 1) + offset
  void (*eval_critical_cubic)(double offset, double const* x, double* out,
                              std::size_t n);
  // Number of i with (v[i] < 0) != (v[i + 1] < 0).
  std::size_t (*count_sign_changes)(double const* v, std::size_t n);
};

KernelTable const& scalar_kernels();
// Null when the variant is not compiled in or the CPU lacks it.
KernelTable const* avx2_kernels();
KernelTable const* neon_kernels();

// Best available table, chosen once at first use. Setting the environment
// variable QUARTIC_SIMD=scalar forces the reference kernels.
KernelTable const& active_kernels();

std::vector<KernelTable const*> available_kernels();

void eval_quartic_batch(DepressedQuartic const& P, std::span<double const> t,
                        std::span<double> out,
                        KernelTable const& k = active_kernels());

void eval_reduced_batch(TrigParams const& tp,
                        std::span<double const> cos_theta,
                        std::span<double const> cos_4theta,
                        std::span<double> out,
                        KernelTable const& k = active_kernels());

// out[i] = h(x[i]) + a/16, the residual of the critical-point cubic.
void eval_critical_residual_batch(double a, std::span<double const> x,
                                  std::span<double> out,
                                  KernelTable const& k = active_kernels());

std::size_t count_sign_changes(std::span<double const> v,
                               KernelTable const& k = active_kernels());

// n >= 2 evenly spaced angles covering [0, pi]; the last is exactly pi.
std::vector<double> angle_grid(std::size_t n);

struct AngleTable {
  std::vector<double> theta;
  std::vector<double> cos_theta;
  std::vector<double> cos_4theta;
};

// cos(theta) and cos(4 theta), each taken directly from its argument.
AngleTable make_angle_table(std::size_t n);

// f on an angle table.
std::vector<double> sample_reduced(TrigParams const& tp,
                                   AngleTable const& angles,
                                   KernelTable const& k = active_kernels());

}  // namespace quartic::simd
