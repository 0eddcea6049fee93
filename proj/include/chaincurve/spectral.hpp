#pragma once

#include <string>
#include <vector>

#include "chaincurve/chain.hpp"

namespace chaincurve {

// One term c J^{i alpha} of a diagonal-operator sum; alpha must be rational
// for the boundary construction to close up.
struct OperatorTerm {
  double c = 0.0;
  Rational alpha{0};
};

// Parses "c:alpha" with c a decimal and alpha an integer, fraction or
// decimal (all taken exactly).  Throws Error on malformed text.
OperatorTerm parse_operator_term(const std::string& text);

// Wraps rationalize with the spectral error type: a float exponent that has
// no small rational representation cannot define a closed boundary curve.
Rational spectral_alpha_from_double(double alpha);

struct BoundaryChains {
  Chain upper;              // coefficients c_k e^{+alpha_k pi/2}
  Chain lower;              // coefficients c_k e^{-alpha_k pi/2}
  long long denominator = 1;  // least common denominator N of the exponents
  int exponent_scale = 1;     // gcd divided out of m_k = alpha_k N
};

// The two boundary curves of the spectrum region swept by the operator
// family: each term contributes exponent m_k = alpha_k N and coefficient
// c_k e^{+-alpha_k pi / 2} (a form independent of how the exponents are
// normalized).  The common gcd of the exponents is divided out so the
// chains satisfy the coprimality convention; the removed factor only
// re-parametrizes the trace and is recorded in exponent_scale.
// Throws IdentityOperator when every exponent is zero.
BoundaryChains boundary_chains(const std::vector<OperatorTerm>& terms);

}  // namespace chaincurve
