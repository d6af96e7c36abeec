#pragma once

#include <array>
#include <complex>
#include <limits>
#include <span>
#include <vector>

#include "quartic/poly_core.hpp"

namespace quartic::oracle {

// Coefficients, highest degree first.
using Coefficients = std::vector<double>;

// P, P', then negated remainders, each rescaled to unit max-|coefficient|.
// When the remainder sequence stops at a non-constant polynomial, P had a
// repeated root; the chain is then rebuilt from the square-free part.
struct SturmChain {
  std::vector<Coefficients> polys;
  bool multiple_roots = false;
  // Every real root of the quartic lies strictly inside this radius.
  double root_radius = 1.0;
};

SturmChain build_sturm_chain(DepressedQuartic const& P);

int sign_variations(SturmChain const& chain, double x);

// Distinct real roots in (lo, hi]; either end may be infinite. Throws
// kInvalidInput unless lo < hi.
int sturm_count(SturmChain const& chain, double lo, double hi);
int sturm_count(DepressedQuartic const& P,
                double lo = -std::numeric_limits<double>::infinity(),
                double hi = std::numeric_limits<double>::infinity());

using Roots = std::array<std::complex<double>, 4>;

// All four roots by Weierstrass (Durand-Kerner) iteration, Newton-polished.
// Falls back to real-root isolation and deflation when the residual target
// 1e-10 (1 + B^4) is missed; throws kOracleFailure if that also fails.
Roots solve_all_roots(DepressedQuartic const& P);

struct Discriminant {
  double value = 0.0;           // real part of prod_{i<j} (r_i - r_j)^2
  double imag_residual = 0.0;   // |imaginary part|
  bool imprecise = false;       // imag residual above 1e-6 relative
};

Discriminant discriminant_from_roots(std::span<std::complex<double> const, 4> roots);

struct OracleReport {
  int n_real_distinct = 0;  // Sturm count on the whole line
  bool multiple_roots = false;
  Roots all_roots{};
  int n_real_entries = 0;   // roots with |Im| within the clustering radius
  int n_real_clustered = 0; // distinct real values among all_roots
  Discriminant discriminant;
  double degeneracy_margin = 0.0;  // min pairwise root distance
  double max_residual = 0.0;
};

// Clustering radius 1e-6 (1 + B) for deciding realness and distinctness.
double clustering_radius(DepressedQuartic const& P);

OracleReport run_oracle(DepressedQuartic const& P);

namespace detail {

Coefficients remainder(Coefficients const& num, Coefficients const& den);
Coefficients quotient(Coefficients const& num, Coefficients const& den);
double horner(Coefficients const& c, double x);
std::complex<double> horner(Coefficients const& c, std::complex<double> x);

// The deflation route used when simultaneous iteration misses the target.
Roots solve_by_deflation(DepressedQuartic const& P);

}  // namespace detail

}  // namespace quartic::oracle
