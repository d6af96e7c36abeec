#include "quartic/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "quartic/bisection.hpp"
#include "quartic/error.hpp"

namespace quartic::oracle {

namespace {

using Complex = std::complex<double>;

constexpr double kZeroRemainder = 1e-10;
constexpr int kMaxIterations = 500;

double max_abs(Coefficients const& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

Coefficients normalized(Coefficients c) {
  double const scale = max_abs(c);
  if (scale > 0.0) {
    for (double& v : c) v /= scale;
  }
  return c;
}

Coefficients trim_leading_zeros(Coefficients c) {
  auto first = std::find_if(c.begin(), c.end(), [](double v) { return v != 0.0; });
  c.erase(c.begin(), first);
  return c;
}

Coefficients derivative(Coefficients const& c) {
  Coefficients d;
  std::size_t const degree = c.size() - 1;
  for (std::size_t i = 0; i < degree; ++i) {
    d.push_back(c[i] * static_cast<double>(degree - i));
  }
  return d;
}

Coefficients coefficients_of(DepressedQuartic const& P) {
  return {1.0, 0.0, P.m, P.p, P.q};
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

// A remainder under the zero threshold can also come from an ill-conditioned
// chain (a tiny leading coefficient upstream). Accept the gcd only if it
// really divides f and f'.
bool divides_with_derivative(Coefficients const& f, Coefficients const& g) {
  Coefficients monic = g;
  for (double& v : monic) v /= g[0];
  double const grow = std::pow(1.0 + max_abs(monic), static_cast<double>(f.size() - 1));
  double const limit = 1e-7 * grow;
  return max_abs(detail::remainder(normalized(f), monic)) <= limit &&
         max_abs(detail::remainder(normalized(derivative(f)), monic)) <= limit;
}

// Negated-remainder sequence from `f`. Ends on a constant, or on a
// non-constant gcd when f has repeated roots.
std::vector<Coefficients> remainder_sequence(Coefficients const& f) {
  std::vector<Coefficients> chain{normalized(f), normalized(derivative(f))};
  while (chain.back().size() > 1) {
    Coefficients r = detail::remainder(chain[chain.size() - 2], chain.back());
    if (max_abs(r) == 0.0 ||
        (max_abs(r) <= kZeroRemainder && divides_with_derivative(f, chain.back()))) {
      break;
    }
    for (double& v : r) v = -v;
    chain.push_back(normalized(trim_leading_zeros(r)));
  }
  return chain;
}

Complex eval_monic(Coefficients const& c, Complex z) { return detail::horner(c, z); }

// Weierstrass iteration on a monic polynomial, updating in place.
std::vector<Complex> simultaneous_iteration(Coefficients const& monic,
                                            Complex seed, double radius) {
  std::size_t const n = monic.size() - 1;
  std::vector<Complex> z(n);
  Complex w = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    w *= seed;
    z[k] = radius * w;
  }
  for (int it = 0; it < kMaxIterations; ++it) {
    double largest_step = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != k) denom *= z[k] - z[j];
      }
      if (denom == Complex{}) denom = 1e-300;
      Complex const step = eval_monic(monic, z[k]) / denom;
      z[k] -= step;
      largest_step = std::max(largest_step, std::abs(step) / (1.0 + std::abs(z[k])));
    }
    if (largest_step <= 1e-16) break;
  }
  Coefficients const d = derivative(monic);
  for (auto& root : z) {
    for (int it = 0; it < 3; ++it) {
      Complex const value = eval_monic(monic, root);
      Complex const slope = detail::horner(d, root);
      if (slope == Complex{}) break;
      Complex const next = root - value / slope;
      if (std::abs(eval_monic(monic, next)) >= std::abs(value)) break;
      root = next;
    }
  }
  return z;
}

double root_scale(DepressedQuartic const& P) {
  double const r = std::max({std::sqrt(std::abs(P.m)), std::cbrt(std::abs(P.p)),
                             std::sqrt(std::sqrt(std::abs(P.q)))});
  return std::max(r, 0.5);
}

double max_residual(DepressedQuartic const& P, Roots const& roots) {
  Coefficients const c = coefficients_of(P);
  double worst = 0.0;
  for (auto const& r : roots) worst = std::max(worst, std::abs(detail::horner(c, r)));
  return worst;
}

double residual_limit(DepressedQuartic const& P) {
  double const b = cauchy_root_bound(P);
  return 1e-10 * (1.0 + b * b * b * b);
}

void sort_roots(Roots& roots) {
  std::sort(roots.begin(), roots.end(), [](Complex const& l, Complex const& r) {
    return l.real() != r.real() ? l.real() < r.real() : l.imag() < r.imag();
  });
}

void isolate(Coefficients const& squarefree, SturmChain const& chain, double lo,
             double hi, int count, int depth, std::vector<double>& out) {
  if (count == 0) return;
  if (count == 1 || depth > 200) {
    auto g = [&squarefree](double x) { return detail::horner(squarefree, x); };
    double const g_lo = g(lo);
    double const g_hi = g(hi);
    if (g_hi == 0.0 || sign_of(g_lo) * sign_of(g_hi) < 0) {
      out.push_back(bisect(g, lo, hi, g_lo, g_hi));
    }
    return;
  }
  double const mid = lo + 0.5 * (hi - lo);
  int const left = sturm_count(chain, lo, mid);
  isolate(squarefree, chain, lo, mid, left, depth + 1, out);
  isolate(squarefree, chain, mid, hi, count - left, depth + 1, out);
}

// Synthetic division by (t - r).
Coefficients deflate(Coefficients const& c, double r) {
  Coefficients q(c.size() - 1);
  double carry = 0.0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    carry = carry * r + c[i];
    q[i] = carry;
  }
  return q;
}

double magnitude_at(Coefficients const& c, double x) {
  double acc = 0.0;
  for (double v : c) acc = acc * std::abs(x) + std::abs(v);
  return acc;
}

}  // namespace

namespace detail {

Coefficients remainder(Coefficients const& num, Coefficients const& den) {
  Coefficients r = num;
  std::size_t const dn = den.size();
  if (r.size() < dn) return r;
  for (std::size_t i = 0; i + dn <= r.size(); ++i) {
    double const factor = r[i] / den[0];
    r[i] = 0.0;
    for (std::size_t j = 1; j < dn; ++j) r[i + j] -= factor * den[j];
  }
  return Coefficients(r.end() - static_cast<std::ptrdiff_t>(dn - 1), r.end());
}

Coefficients quotient(Coefficients const& num, Coefficients const& den) {
  Coefficients r = num;
  std::size_t const dn = den.size();
  if (r.size() < dn) return {0.0};
  Coefficients q;
  for (std::size_t i = 0; i + dn <= r.size(); ++i) {
    double const factor = r[i] / den[0];
    q.push_back(factor);
    for (std::size_t j = 1; j < dn; ++j) r[i + j] -= factor * den[j];
  }
  return q;
}

double horner(Coefficients const& c, double x) {
  double acc = 0.0;
  for (double v : c) acc = acc * x + v;
  return acc;
}

Complex horner(Coefficients const& c, Complex x) {
  Complex acc = 0.0;
  for (double v : c) acc = acc * x + v;
  return acc;
}

Roots solve_by_deflation(DepressedQuartic const& P) {
  SturmChain const chain = build_sturm_chain(P);
  Coefficients const& squarefree = chain.polys.front();
  double const radius = chain.root_radius;

  std::vector<double> reals;
  isolate(squarefree, chain, -radius, radius, sturm_count(chain, -radius, radius),
          0, reals);

  Coefficients rest = coefficients_of(P);
  std::vector<Complex> found;
  for (double r : reals) {
    // Peel off r while it remains a root, to recover its multiplicity.
    do {
      rest = deflate(rest, r);
      found.emplace_back(r, 0.0);
    } while (rest.size() > 1 &&
             std::abs(horner(rest, r)) <= 1e-7 * magnitude_at(rest, r));
  }

  std::size_t const degree = rest.size() - 1;
  if (degree == 2) {
    Complex const disc = rest[1] * rest[1] - 4.0 * rest[0] * rest[2];
    Complex const s = std::sqrt(disc);
    Complex const base = rest[1] >= 0.0 ? -rest[1] - s : -rest[1] + s;
    Complex const r1 = base / (2.0 * rest[0]);
    Complex const r2 = r1 == Complex{} ? Complex{} : rest[2] / (rest[0] * r1);
    found.push_back(r1);
    found.push_back(r2);
  } else if (degree > 0) {
    Coefficients monic = rest;
    for (double& v : monic) v /= rest[0];
    auto more = simultaneous_iteration(monic, Complex(-0.7, 0.55), root_scale(P) * 1.3);
    found.insert(found.end(), more.begin(), more.end());
  }

  if (found.size() != 4) {
    throw Error(ErrorKind::kOracleFailure, "deflation produced the wrong root count");
  }
  Roots roots;
  std::copy(found.begin(), found.end(), roots.begin());
  sort_roots(roots);
  return roots;
}

}  // namespace detail

SturmChain build_sturm_chain(DepressedQuartic const& P) {
  require_finite(P);
  SturmChain chain;
  double const b = cauchy_root_bound(P);
  chain.root_radius = 2.0 * b;

  Coefficients const f = coefficients_of(P);
  chain.polys = remainder_sequence(f);
  if (chain.polys.back().size() > 1) {
    // Non-constant gcd: count on the square-free part instead.
    chain.multiple_roots = true;
    Coefficients const squarefree = detail::quotient(f, chain.polys.back());
    chain.polys = remainder_sequence(squarefree);
  }
  return chain;
}

int sign_variations(SturmChain const& chain, double x) {
  int changes = 0;
  int last = 0;
  for (auto const& poly : chain.polys) {
    int const s = sign_of(detail::horner(poly, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sturm_count(SturmChain const& chain, double lo, double hi) {
  if (!(lo < hi)) {
    throw Error(ErrorKind::kInvalidInput, "sturm_count requires lo < hi");
  }
  // No real root lies outside the root radius; infinite ends clamp to it.
  lo = std::max(lo, -chain.root_radius);
  hi = std::min(hi, chain.root_radius);
  if (!(lo < hi)) return 0;
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

int sturm_count(DepressedQuartic const& P, double lo, double hi) {
  return sturm_count(build_sturm_chain(P), lo, hi);
}

Roots solve_all_roots(DepressedQuartic const& P) {
  require_finite(P);
  auto const z = simultaneous_iteration(coefficients_of(P), Complex(0.4, 0.9),
                                        root_scale(P));
  Roots roots;
  std::copy(z.begin(), z.end(), roots.begin());
  sort_roots(roots);
  if (max_residual(P, roots) <= residual_limit(P)) return roots;

  roots = detail::solve_by_deflation(P);
  if (max_residual(P, roots) <= residual_limit(P)) return roots;
  throw Error(ErrorKind::kOracleFailure,
              "root solver did not reach the residual target");
}

Discriminant discriminant_from_roots(std::span<Complex const, 4> roots) {
  Complex product = 1.0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      Complex const d = roots[i] - roots[j];
      product *= d * d;
    }
  }
  Discriminant out;
  out.value = product.real();
  out.imag_residual = std::abs(product.imag());
  out.imprecise = out.imag_residual > 1e-6 * std::abs(product);
  return out;
}

double clustering_radius(DepressedQuartic const& P) {
  return 1e-6 * (1.0 + cauchy_root_bound(P));
}

OracleReport run_oracle(DepressedQuartic const& P) {
  OracleReport report;
  SturmChain const chain = build_sturm_chain(P);
  report.n_real_distinct = sturm_count(chain, -std::numeric_limits<double>::infinity(),
                                       std::numeric_limits<double>::infinity());
  report.multiple_roots = chain.multiple_roots;
  report.all_roots = solve_all_roots(P);
  report.max_residual = max_residual(P, report.all_roots);
  report.discriminant = discriminant_from_roots(report.all_roots);

  double const radius = clustering_radius(P);
  std::vector<double> reals;
  for (auto const& r : report.all_roots) {
    if (std::abs(r.imag()) <= radius) reals.push_back(r.real());
  }
  report.n_real_entries = static_cast<int>(reals.size());
  std::sort(reals.begin(), reals.end());
  for (std::size_t i = 0; i < reals.size(); ++i) {
    if (i == 0 || reals[i] - reals[i - 1] > radius) ++report.n_real_clustered;
  }

  report.degeneracy_margin = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      report.degeneracy_margin = std::min(
          report.degeneracy_margin, std::abs(report.all_roots[i] - report.all_roots[j]));
    }
  }
  return report;
}

}  // namespace quartic::oracle
