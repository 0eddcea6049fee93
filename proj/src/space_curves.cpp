#include "chaincurve/space_curves.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "chaincurve/errors.hpp"

namespace chaincurve {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double rational_to_double(const Rational& q) { return to_double(q); }

// Full period of a planar chain lifted by frequency Q = A/B (lowest terms):
// the planar part closes every 2 pi, the height every 2 pi B / A.
double lift_period(const Rational& Q) {
  if (Q == 0) return kTwoPi;
  BigInt den = boost::multiprecision::denominator(Q);
  return kTwoPi * den.convert_to<double>();
}

}  // namespace

double SpaceCurve::z(double t) const {
  return a * std::sin(theta + rational_to_double(Q) * t);
}

double SpaceCurve::dz(double t) const {
  double w = rational_to_double(Q);
  return a * w * std::cos(theta + w * t);
}

Vec3 SpaceCurve::eval(double t) const {
  Vec2 p = planar.eval(t);
  return Vec3{p.x, p.y, z(t)};
}

Vec3 SpaceCurve::derivative(double t) const {
  Vec2 v = planar.derivative(t);
  return Vec3{v.x, v.y, dz(t)};
}

double SpaceCurve::period() const { return lift_period(Q); }

SpaceCurve PeriodicHelix::curve() const { return SpaceCurve{planar.to_chain(), a, theta, Q}; }

const char* to_string(HelixClass c) {
  switch (c) {
    case HelixClass::capareda: return "capareda";
    case HelixClass::constantPrecession: return "constantPrecession";
    case HelixClass::sPeriodic: return "sPeriodic";
    case HelixClass::general: return "general";
  }
  return "unknown";
}

namespace {

bool verify_quadric(const PeriodicHelix& helix, QuadricKind kind, double expected,
                    double tol_abs) {
  SpaceCurve curve = helix.curve();
  double period = lift_period(helix.Q);
  for (int i = 0; i < 100; ++i) {
    Vec3 p = curve.eval(period * i / 100.0);
    double v = p.x * p.x + p.y * p.y + (kind == QuadricKind::sum ? p.z * p.z : -p.z * p.z);
    if (std::fabs(v - expected) > tol_abs) return false;
  }
  return true;
}

}  // namespace

HelixClass classify_helix(const PeriodicHelix& helix) {
  const bool theta_zero = std::fabs(helix.theta) <= 1e-12;
  const bool half_step = helix.Q * 2 == Rational(helix.planar.Q());
  if (!theta_zero || !half_step) return HelixClass::general;

  const double c1 = helix.planar.c1().as_double();
  const double c2 = helix.planar.c2().as_double();
  const double prod = c1 * c2;
  const double a2 = helix.a * helix.a;
  const double mag = (std::fabs(c1) + std::fabs(c2)) * (std::fabs(c1) + std::fabs(c2)) + a2;
  const double tol = 1e-9 * std::max(1.0, mag);
  const double expected = (c1 + c2) * (c1 + c2);

  if (prod > 0 && std::fabs(a2 - 4.0 * prod) <= tol &&
      verify_quadric(helix, QuadricKind::sum, expected, tol)) {
    return HelixClass::capareda;
  }
  if (prod < 0 && std::fabs(a2 + 4.0 * prod) <= tol &&
      verify_quadric(helix, QuadricKind::difference, expected, tol)) {
    return HelixClass::constantPrecession;
  }
  return HelixClass::sPeriodic;
}

EnvelopeBounds s_helix_envelope(const PeriodicHelix& helix) {
  const bool theta_zero = std::fabs(helix.theta) <= 1e-12;
  const bool half_step = helix.Q * 2 == Rational(helix.planar.Q());
  if (!theta_zero || !half_step) {
    throw NotSPeriodic("envelope bounds need theta = 0 and the half-step frequency");
  }
  const double c1 = helix.planar.c1().as_double();
  const double c2 = helix.planar.c2().as_double();
  const double a2 = helix.a * helix.a;
  EnvelopeBounds out;
  out.kind = c1 * c2 > 0 ? QuadricKind::sum : QuadricKind::difference;
  const double at_zero = (c1 + c2) * (c1 + c2);  // sin^2 = 0
  const double at_one =
      out.kind == QuadricKind::sum ? (c1 - c2) * (c1 - c2) + a2 : (c1 - c2) * (c1 - c2) - a2;
  out.lower = std::min(at_zero, at_one);
  out.upper = std::max(at_zero, at_one);
  return out;
}

void TorusKnotSpec::validate() const {
  if (p < 2) throw Error("the longitude count must be at least 2");
  if (q < 1) throw Error("the meridian count must be at least 1");
  if (std::gcd(p, q) != 1) throw Error("the winding counts must be coprime");
  if (!(R > 0) || !(r > 0) || !(r < R)) throw Error("radii must satisfy 0 < r < R");
  if (!(amplitude() > 0)) throw Error("the vertical amplitude must be positive");
}

Vec3 TorusKnotCurve::eval(double t) const {
  double rho = spec.R + spec.r * std::cos(spec.q * t);
  return Vec3{rho * std::cos(spec.p * t), rho * std::sin(spec.p * t),
              spec.amplitude() * std::sin(spec.q * t)};
}

Vec3 TorusKnotCurve::derivative(double t) const {
  double rho = spec.R + spec.r * std::cos(spec.q * t);
  double drho = -spec.r * spec.q * std::sin(spec.q * t);
  double cp = std::cos(spec.p * t);
  double sp = std::sin(spec.p * t);
  return Vec3{drho * cp - rho * spec.p * sp, drho * sp + rho * spec.p * cp,
              spec.amplitude() * spec.q * std::cos(spec.q * t)};
}

TorusKnotCurve torus_knot_curve(const TorusKnotSpec& spec) {
  spec.validate();
  return TorusKnotCurve{spec};
}

SpaceCurve torus_knot_fourier(const TorusKnotSpec& spec) {
  spec.validate();
  const Rational half_r = rational_from_double(spec.r) / 2;
  Chain planar(std::vector<ChainTerm>{
      ChainTerm{spec.p, Coefficient(rational_from_double(spec.R)),
                Coefficient(rational_from_double(spec.R))},
      ChainTerm{spec.p + spec.q, Coefficient(half_r), Coefficient(half_r)},
      ChainTerm{spec.p - spec.q, Coefficient(half_r), Coefficient(half_r)}});
  return SpaceCurve{std::move(planar), spec.amplitude(), 0.0, Rational(spec.q)};
}

std::vector<ProjectionCrossing> projection_self_intersections(const TorusKnotSpec& spec) {
  spec.validate();
  const SpaceCurve curve = torus_knot_fourier(spec);
  const double scale = curve.planar.scale();
  std::vector<ProjectionCrossing> out;
  for (int k = 1; k <= spec.p - 1; ++k) {
    for (int j = 0; j <= spec.q - 1; ++j) {
      double t = kPi * k / spec.p + kPi * j / spec.q;
      double s = -kPi * k / spec.p + kPi * j / spec.q;
      if (s < 0) s += kTwoPi;
      Vec2 pt = curve.planar.eval(t);
      Vec2 ps = curve.planar.eval(s);
      if (std::hypot(pt.x - ps.x, pt.y - ps.y) > 1e-9 * scale) continue;
      Vec2 vt = curve.planar.derivative(t);
      Vec2 vs = curve.planar.derivative(s);
      double margin = std::fabs(vt.y * vs.x - vs.y * vt.x);
      if (margin <= 1e-9 * scale * scale) continue;
      double zt = curve.z(t);
      double zs = curve.z(s);
      if (std::fabs(zt - zs) <= 1e-12 * std::max(1.0, std::fabs(curve.a))) continue;
      ProjectionCrossing crossing;
      crossing.t = t;
      crossing.s = s;
      crossing.point = Vec2{0.5 * (pt.x + ps.x), 0.5 * (pt.y + ps.y)};
      crossing.z_t = zt;
      crossing.z_s = zs;
      crossing.slope_margin = margin;
      out.push_back(crossing);
    }
  }
  return out;
}

std::pair<double, double> s_torus_envelope(const TorusKnotSpec& spec) {
  spec.validate();
  double v = spec.amplitude() * spec.amplitude() - spec.r * spec.r;
  return {std::min(0.0, v), std::max(0.0, v)};
}

LiftReport lift_planar_features(const SpaceCurve& curve, const OracleConfig& config) {
  LiftReport report;
  const Curve2D planar = curve_from_chain(curve.planar);
  const double z_tol = 1e-9 * (std::fabs(curve.a) + 1.0);
  const double dz_tol = 1e-9 * (std::fabs(curve.a) * std::fabs(rational_to_double(curve.Q)) + 1.0);

  OracleIntersections crossings = find_self_intersections(planar, config);
  for (const auto& pair : crossings.intersections) {
    LiftedIntersection lifted;
    lifted.t = pair.t;
    lifted.s = pair.s;
    lifted.z_gap = std::fabs(curve.z(pair.t) - curve.z(pair.s));
    lifted.lifts = lifted.z_gap <= z_tol;
    lifted.point = curve.eval(pair.t);
    report.intersections.push_back(lifted);
  }
  for (const auto& hit : find_singular_points(planar, config)) {
    LiftedSingular lifted;
    lifted.t = hit.t;
    lifted.point = curve.eval(hit.t);
    lifted.dz_value = curve.dz(hit.t);
    lifted.lifts = std::fabs(lifted.dz_value) <= dz_tol;
    report.singulars.push_back(lifted);
  }
  return report;
}

double min_speed_on_grid(const SpaceCurve& curve, int n_samples) {
  if (n_samples < 2) throw Error("grid needs at least 2 samples");
  const double period = lift_period(curve.Q);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_samples; ++i) {
    Vec3 v = curve.derivative(period * i / n_samples);
    best = std::min(best, norm(v));
  }
  return best;
}

}  // namespace chaincurve
