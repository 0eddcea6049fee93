#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chaincurve/chain.hpp"
#include "chaincurve/oracle.hpp"
#include "chaincurve/two_chain.hpp"

namespace chaincurve {

// A planar chain lifted by a sinusoidal height: z(t) = a sin(theta + Q t).
// Q is kept as an exact rational because half-integer frequencies matter
// (the lift then closes only after two turns of the planar curve).
struct SpaceCurve {
  Chain planar;
  double a = 0.0;
  double theta = 0.0;
  Rational Q{0};

  double z(double t) const;
  double dz(double t) const;
  Vec3 eval(double t) const;
  Vec3 derivative(double t) const;
  // Full closing period: the planar part closes every 2 pi, the height
  // needs the denominator of Q turns.
  double period() const;
};

struct PeriodicHelix {
  TwoChain planar;
  double a = 0.0;
  double theta = 0.0;
  Rational Q{0};

  SpaceCurve curve() const;
};

enum class HelixClass {
  capareda,             // c1 c2 > 0, a^2 = 4 c1 c2: lies on a sphere
  constantPrecession,   // c1 c2 < 0, a^2 = -4 c1 c2: lies on x^2+y^2-z^2 = const
  sPeriodic,            // theta = 0 and Q = (l - m)/2, no amplitude relation
  general
};

const char* to_string(HelixClass c);

// Classification with a numeric double-check: the quadric identities are
// verified on a 100-point sample at 1e-9 relative tolerance before the
// special classes are reported.
HelixClass classify_helix(const PeriodicHelix& helix);

enum class QuadricKind { sum, difference };  // x^2+y^2+z^2 vs x^2+y^2-z^2

struct EnvelopeBounds {
  QuadricKind kind = QuadricKind::sum;
  double lower = 0.0;
  double upper = 0.0;
};

// Exact range of the natural quadric along an s-periodic helix:
//   x^2+y^2 +- z^2 = (c1+c2)^2 - (4 c1 c2 -+ a^2) sin^2((l-m) t / 2),
// evaluated at the two extremes of sin^2.  The sign is chosen to match the
// coefficient product (sum for c1 c2 > 0).  Throws NotSPeriodic unless
// theta = 0 and Q = (l - m)/2.
EnvelopeBounds s_helix_envelope(const PeriodicHelix& helix);

struct TorusKnotSpec {
  int p = 2;                // longitude count, >= 2
  int q = 3;                // meridian count, >= 1, coprime to p
  double R = 3.0;           // torus center-circle radius
  double r = 1.0;           // torus tube radius, 0 < r < R
  std::optional<double> a;  // vertical amplitude, defaults to r

  double amplitude() const { return a ? *a : r; }
  void validate() const;    // throws Error on violations
};

// Direct trigonometric form ([R + r cos(q t)] cos(p t), ..., a sin(q t)).
struct TorusKnotCurve {
  TorusKnotSpec spec;
  Vec3 eval(double t) const;
  Vec3 derivative(double t) const;
};

TorusKnotCurve torus_knot_curve(const TorusKnotSpec& spec);

// The same curve as a chain with exponents (p, p+q, p-q) and coefficients
// (R, r/2, r/2), lifted by z = a sin(q t).
SpaceCurve torus_knot_fourier(const TorusKnotSpec& spec);

// One crossing of the (x, y) projection: two parameters over the same
// planar point at different heights.
struct ProjectionCrossing {
  double t = 0.0;
  double s = 0.0;
  Vec2 point;
  double z_t = 0.0;
  double z_s = 0.0;
  double slope_margin = 0.0;  // |y'(t) x'(s) - y'(s) x'(t)|
};

// The q(p-1) projection crossings at k pi/p + j pi/q paired with
// -k pi/p + j pi/q, each verified for planar coincidence, transversal
// slopes and genuine height separation before being returned.
std::vector<ProjectionCrossing> projection_self_intersections(const TorusKnotSpec& spec);

// Range of [R - sqrt(x^2+y^2)]^2 + z^2 - r^2 along the curve: {0, a^2 - r^2}
// ordered.  Collapses to [0, 0] exactly when a = r (the curve stays on the
// torus).
std::pair<double, double> s_torus_envelope(const TorusKnotSpec& spec);

struct LiftedIntersection {
  double t = 0.0, s = 0.0;
  Vec3 point;
  bool lifts = false;   // heights agree: still a self-intersection in space
  double z_gap = 0.0;
};

struct LiftedSingular {
  double t = 0.0;
  Vec3 point;
  bool lifts = false;   // the height is also stationary there
  double dz_value = 0.0;
};

struct LiftReport {
  std::vector<LiftedIntersection> intersections;
  std::vector<LiftedSingular> singulars;
};

// Finds the planar features of the projection with the numeric oracle and
// reports which survive the lift: a crossing needs equal heights (within
// 1e-9 (|a|+1)); a cusp needs the height rate to vanish as well.
LiftReport lift_planar_features(const SpaceCurve& curve, const OracleConfig& config = {});

// Smallest 3-space speed over a uniform parameter grid (the no-cusp check
// for torus knot curves).
double min_speed_on_grid(const SpaceCurve& curve, int n_samples);

}  // namespace chaincurve
