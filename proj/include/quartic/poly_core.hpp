#pragma once

namespace quartic {

// Monic z^4 + a3 z^3 + a2 z^2 + a1 z + a0.
struct GeneralQuartic {
  double a3 = 0.0;
  double a2 = 0.0;
  double a1 = 0.0;
  double a0 = 0.0;
};

// P(t) = t^4 + m t^2 + p t + q.
//
// `shift` is a3/4 of the quartic this was depressed from, so a root t of P
// maps back to z = t - shift. Zero when constructed directly.
struct DepressedQuartic {
  double m = 0.0;
  double p = 0.0;
  double q = 0.0;
  double shift = 0.0;

  bool is_finite() const;
  double to_original(double t) const { return t - shift; }
};

// Removes the cubic term with z = t - a3/4. Throws kInvalidInput on
// non-finite coefficients.
DepressedQuartic depress(GeneralQuartic const& g);

// Horner evaluation of t^4 + m t^2 + p t + q.
double eval_quartic(DepressedQuartic const& P, double t);

// P'(t) = 4t^3 + 2mt + p.
double eval_quartic_derivative(DepressedQuartic const& P, double t);

// B = 1 + max(|m|, |p|, |q|). Every real root lies strictly inside [-B, B].
double cauchy_root_bound(DepressedQuartic const& P);

// Throws kInvalidInput unless m, p, q and shift are all finite.
void require_finite(DepressedQuartic const& P);

}  // namespace quartic
