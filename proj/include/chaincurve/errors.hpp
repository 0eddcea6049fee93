#pragma once

#include <stdexcept>
#include <string>

namespace chaincurve {

// Base class for every error this library throws on contract violations.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A curve whose relevant coordinate is identically zero, so an axis search
// would be vacuous (every point lies on the axis).
struct DegenerateChain : Error {
  using Error::Error;
};

// The y-axis procedure requires every exponent to be odd.
struct NotAllOdd : Error {
  using Error::Error;
};

// Root isolation was asked to solve the identically-zero polynomial.
struct ZeroPolynomial : Error {
  using Error::Error;
};

// Refinement failed to reach the requested tolerance in the iteration budget.
struct NoConvergence : Error {
  using Error::Error;
};

// A precondition of the form "coefficients satisfy an exact relation" failed.
struct ConditionNotMet : Error {
  using Error::Error;
};

// A float input could not be identified with a rational of bounded denominator.
struct IrrationalRatio : Error {
  using Error::Error;
};

// Cusp counting is defined for cycloids only (trochoids with d != r have none).
struct NotACycloid : Error {
  using Error::Error;
};

// Operator exponents must be exact rationals.
struct NonRationalAlpha : Error {
  using Error::Error;
};

// The operator spec degenerates to a multiple of the identity (all exponents 0).
struct IdentityOperator : Error {
  using Error::Error;
};

// Envelope bounds are defined for S-periodic helices only.
struct NotSPeriodic : Error {
  using Error::Error;
};

// Multiple-angle reduction order exceeds the supported bound.
struct DegreeLimit : Error {
  using Error::Error;
};

}  // namespace chaincurve
