#pragma once

#include <vector>

#include "chaincurve/polynomial.hpp"

namespace chaincurve {

struct Root {
  double value = 0.0;
  // The root also annihilates gcd(p, p'), so its multiplicity in p exceeds 1.
  bool suspected_multiple = false;
  // The root was certified by exact rational evaluation at an interval end.
  bool endpoint = false;
};

using RootSet = std::vector<Root>;

// All real roots of p in [lo, hi], strictly increasing.
//
// The search runs on the squarefree part of p, so even-multiplicity roots
// (which never produce a sign change) are still found.  Interval endpoints
// are tested by exact rational arithmetic, which certifies roots that
// floating-point evaluation would only see as "small".  The interval is
// split into monotone pieces at the roots of the derivative (computed by
// the same procedure, recursively), so each piece holds at most one root
// and arbitrarily close root pairs cannot hide between probe points; every
// bracket is then polished by bracket-guarded Newton to machine precision,
// and every accepted root satisfies |p(root)| <= tol * max|coeff(p)|.
//
// Throws ZeroPolynomial when p is identically zero and NoConvergence when
// polishing exhausts its iteration budget.
RootSet real_roots(const Polynomial& p, double lo, double hi, double tol = 1e-12);

}  // namespace chaincurve
