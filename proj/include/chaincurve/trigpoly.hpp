#pragma once

#include <utility>

#include "chaincurve/polynomial.hpp"

namespace chaincurve {

// Largest multiple-angle reduction order kept in the recurrence caches.
// Beyond it the coefficient growth stops being useful and the request is
// almost certainly a mistake, so DegreeLimit is thrown instead.
inline constexpr int kMaxReductionOrder = 64;

// P_n with sin((2n+1)x) = P_n(sin^2 x) sin x and
// cos((2n+1)x) = (-1)^n P_n(cos^2 x) cos x.  P_0 = 1, deg P_n = n.
const Polynomial& odd_sin_poly(int n);

// (R_n, G_n) with sin(2nx) = R_n(sin^2 x) sin x cos x and
// cos(2nx) = G_n(cos^2 x), for n >= 1.  deg R_n = n-1, deg G_n = n.
const std::pair<Polynomial, Polynomial>& even_reduction(int n);

// A trigonometric polynomial written in the reduced basis
//   const_part(u) + sin t * sin_part(u) + cos t * cos_part(u)
//                 + sin t cos t * sincos_part(u),   u = sin^2 t.
// Every f(t) built from sines and cosines of integer multiples of t has a
// unique expression of this shape.
struct TrigExpansion {
  Polynomial const_part;
  Polynomial sin_part;
  Polynomial cos_part;
  Polynomial sincos_part;

  double eval(double t) const;

  TrigExpansion operator+(const TrigExpansion& o) const;
  TrigExpansion operator*(const Rational& k) const;
};

// Exact reduction of sin(l t) and cos(l t) into the basis above.
// l may be any integer (negative and zero included).
TrigExpansion reduce_sin(int l);
TrigExpansion reduce_cos(int l);

}  // namespace chaincurve
