#pragma once

#include <vector>

#include "chaincurve/chain.hpp"

namespace chaincurve {

enum class Axis { x, y };

enum class AxisClassification {
  selfIntersection,   // both velocity components nonzero at the meeting
  smoothVertical,     // x' = 0, y' != 0: vertical tangent on the axis
  smoothHorizontal,   // y' = 0, x' != 0: horizontal tangent on the axis
  singular            // both velocity components vanish
};

const char* to_string(AxisClassification c);

// One location where two parameters (or one degenerate parameter) of the
// curve meet on a coordinate axis.  u0 is the root of the reduced
// polynomial that produced it (cos t1 in both searches).
struct AxisPoint {
  Axis axis = Axis::x;
  double u0 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;   // equals t1 for the degenerate single-parameter hits
  Vec2 location;
  AxisClassification classification = AxisClassification::selfIntersection;
  double dx1 = 0.0;  // velocity at t1, recorded for the report
  double dy1 = 0.0;
  bool endpoint = false;             // root certified at the interval edge
  bool suspected_multiple = false;   // root of multiplicity > 1 upstream
};

// Meetings of t1 and t2 = -t1 on the x axis: roots u0 = cos t1 of
//   S1(1-u^2) + u V1(1-u^2) = 0   in [-1, 1].
// Roots at u0 = +-1 pair a parameter with itself (t = 0 or pi); there the
// tangent is never transversal, so they are classified but cannot be
// self-intersections.  Throws DegenerateChain when y is identically zero.
std::vector<AxisPoint> x_axis_points(const Chain& chain);

// Meetings of t1 and t2 = pi - t1 on the y axis, available only when every
// exponent is odd (the curve then has the symmetry that makes this exact).
// Roots u0 = cos t1 of Q1(1 - u^2) = 0 in [0, 1]; the polynomial is even in
// u, so the nonnegative roots carry everything.  Each u0 in (0, 1) with a
// nonzero meeting height also produces the mirrored meeting at (0, -y0).
// u0 = 0 degenerates to the single parameter pi/2.  Throws NotAllOdd or
// DegenerateChain (x identically zero).
std::vector<AxisPoint> y_axis_points(const Chain& chain);

struct ParamPoint {
  double t = 0.0;
  Vec2 location;
};

// Every parameter in [0, 2pi) where both velocity components vanish.
// Solved exactly: writing s = sin t, the velocities are
//   x'(t) = A(s) cos t + B(s),   y'(t) = C(s) cos t + D(s),
// so A D - B C = 0 is necessary; each root s0 is tested against both
// branches cos t = +-sqrt(1 - s0^2) and the surviving parameters are
// verified against the velocities directly.  Degenerate systems (a velocity
// component identically zero, or A D - B C identically zero) fall back to a
// guarded numeric scan.  Throws DegenerateChain when the curve is a point.
std::vector<ParamPoint> general_singular_points(const Chain& chain);

}  // namespace chaincurve
