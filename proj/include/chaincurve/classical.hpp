#pragma once

#include <optional>

#include "chaincurve/two_chain.hpp"

namespace chaincurve {

enum class RollingKind { epicycloid, hypocycloid, epitrochoid, hypotrochoid };

const char* to_string(RollingKind k);

// A circle of radius r rolling on a fixed circle of radius R (outside for
// the epi family, inside for hypo), tracing the point at distance d from
// the rolling center (d = r for the cycloids proper).
struct RollingSpec {
  RollingKind kind = RollingKind::epicycloid;
  Rational R{1};
  Rational r{1};
  std::optional<Rational> d;  // defaults to r

  Rational pen() const { return d ? *d : r; }
  bool is_cycloid() const { return pen() == r; }
};

// The rolling curve rewritten as a two-member chain.  With (R +- r)/r = p/q
// in lowest terms, the epi family becomes (c1, c2, m, l) = (R+r, -pen, q, p)
// under rolling angle s = q t, and the hypo family becomes
// (R-r, pen, -q, p) under s = -q t.
struct RollingConversion {
  TwoChain curve;
  Rational q_factor;  // |rolling angle| = q_factor * |chain parameter|
  bool negated;       // hypo family: the chain parameter runs backwards
};

// Throws DegenerateChain for the hypocycloid with R = 2r (the trace
// degenerates to a diameter) and Error for nonsensical radii.
RollingConversion to_two_chain(const RollingSpec& spec);

// Number of cusps of a cycloid: the order of its rotation group, after
// verifying that the converted chain really satisfies the exact vanishing
// condition.  Throws NotACycloid when d != r.
int cusp_count(const RollingSpec& spec);

}  // namespace chaincurve
