#include "chaincurve/axis_analysis.hpp"

#include <algorithm>
#include <cmath>

#include "chaincurve/errors.hpp"
#include "chaincurve/rootfind.hpp"

namespace chaincurve {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double fold(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  // fmod can land exactly on the period from below
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

AxisClassification classify_velocity(double dx, double dy, double tol) {
  bool x_still = std::fabs(dx) <= tol;
  bool y_still = std::fabs(dy) <= tol;
  if (x_still && y_still) return AxisClassification::singular;
  if (x_still) return AxisClassification::smoothVertical;
  if (y_still) return AxisClassification::smoothHorizontal;
  return AxisClassification::selfIntersection;
}

// 1 - u^2, the bridge between the root variable u = cos t and the canonical
// variable sin^2 t.
const Polynomial& one_minus_u_sq() {
  static const Polynomial p({Rational(1), Rational(0), Rational(-1)});
  return p;
}

AxisPoint make_point(const Chain& chain, Axis axis, double u0, double t1, double t2,
                     Vec2 location, double tol, bool endpoint, bool multiple) {
  AxisPoint pt;
  pt.axis = axis;
  pt.u0 = u0;
  pt.t1 = t1;
  pt.t2 = t2;
  pt.location = location;
  Vec2 v = chain.derivative(t1);
  pt.dx1 = v.x;
  pt.dy1 = v.y;
  pt.classification = classify_velocity(v.x, v.y, tol);
  pt.endpoint = endpoint;
  pt.suspected_multiple = multiple;
  return pt;
}

}  // namespace

const char* to_string(AxisClassification c) {
  switch (c) {
    case AxisClassification::selfIntersection: return "selfIntersection";
    case AxisClassification::smoothVertical: return "smoothVertical";
    case AxisClassification::smoothHorizontal: return "smoothHorizontal";
    case AxisClassification::singular: return "singular";
  }
  return "unknown";
}

std::vector<AxisPoint> x_axis_points(const Chain& chain) {
  const CanonicalForms f = canonical_forms(chain);
  if (f.S1.is_zero() && f.V1.is_zero()) {
    throw DegenerateChain("y is identically zero; every parameter lies on the x axis");
  }
  const Polynomial r = f.S1.compose(one_minus_u_sq()) +
                       Polynomial::variable() * f.V1.compose(one_minus_u_sq());
  if (r.is_zero()) {
    throw DegenerateChain("x-axis meeting polynomial vanished identically");
  }
  const double tol = 1e-9 * chain.scale();
  std::vector<AxisPoint> out;
  for (const Root& root : real_roots(r, -1.0, 1.0)) {
    double u0 = std::clamp(root.value, -1.0, 1.0);
    double t1 = std::acos(u0);  // sin t1 >= 0 by construction
    bool self_pair = u0 >= 1.0 - 1e-15 || u0 <= -1.0 + 1e-15;
    double t2 = self_pair ? t1 : fold(kTwoPi - t1);
    Vec2 location{chain.eval(t1).x, 0.0};
    out.push_back(make_point(chain, Axis::x, u0, t1, t2, location, tol, root.endpoint,
                             root.suspected_multiple));
  }
  return out;
}

std::vector<AxisPoint> y_axis_points(const Chain& chain) {
  if (!chain.all_exponents_odd()) {
    throw NotAllOdd("the y-axis meeting search requires every exponent to be odd");
  }
  const CanonicalForms f = canonical_forms(chain);
  if (f.Q1.is_zero()) {
    throw DegenerateChain("x is identically zero; every parameter lies on the y axis");
  }
  const Polynomial q = f.Q1.compose(one_minus_u_sq());  // even in u: u0 and -u0 pair up
  const double tol = 1e-9 * chain.scale();
  std::vector<AxisPoint> out;
  for (const Root& root : real_roots(q, 0.0, 1.0)) {
    double u0 = std::clamp(root.value, 0.0, 1.0);
    if (u0 <= 1e-12) {
      // cos t1 = 0 pairs pi/2 with itself.
      double t1 = kPi / 2.0;
      Vec2 location{0.0, chain.eval(t1).y};
      out.push_back(make_point(chain, Axis::y, u0, t1, t1, location, tol, false,
                               root.suspected_multiple));
      continue;
    }
    double t1 = std::acos(u0);
    double t2 = kPi - t1;
    double y0 = chain.eval(t1).y;
    out.push_back(make_point(chain, Axis::y, u0, t1, t2, Vec2{0.0, y0}, tol, root.endpoint,
                             root.suspected_multiple));
    if (std::fabs(y0) > tol) {
      // The reflected meeting through the origin: knots at -t1 and pi + t1.
      double t1m = fold(kTwoPi - t1);
      double t2m = kPi + t1;
      out.push_back(make_point(chain, Axis::y, u0, t1m, t2m, Vec2{0.0, -y0}, tol,
                               root.endpoint, root.suspected_multiple));
    }
  }
  return out;
}

namespace {

// Shared numeric fallback: minima of |velocity|^2 polished by Newton on its
// derivative.  Used when the polynomial elimination degenerates.
std::vector<double> scan_singular_params(const Chain& chain, double tol) {
  const int n = 8192;
  std::vector<double> speed2(n);
  for (int i = 0; i < n; ++i) {
    Vec2 v = chain.derivative(kTwoPi * i / n);
    speed2[i] = v.x * v.x + v.y * v.y;
  }
  double scale = chain.scale();
  double attempt_cap = 1e-4 * scale * scale;  // generous: rejection happens after polish
  std::vector<double> params;
  for (int i = 0; i < n; ++i) {
    double prev = speed2[(i + n - 1) % n];
    double next = speed2[(i + 1) % n];
    if (speed2[i] > prev || speed2[i] > next || speed2[i] > attempt_cap) continue;
    double t = kTwoPi * i / n;
    for (int iter = 0; iter < 60; ++iter) {
      Vec2 v = chain.derivative(t);
      Vec2 a = chain.second_derivative(t);
      Vec2 j = chain.third_derivative(t);
      double g = v.x * a.x + v.y * a.y;
      double dg = a.x * a.x + a.y * a.y + v.x * j.x + v.y * j.y;
      if (dg == 0.0) break;
      double step = g / dg;
      t -= step;
      if (std::fabs(step) < 1e-16) break;
    }
    Vec2 v = chain.derivative(t);
    if (std::hypot(v.x, v.y) <= tol) params.push_back(fold(t));
  }
  return params;
}

// Zeros of a single velocity component when the other vanishes identically.
std::vector<double> scan_component_zeros(const Chain& chain, bool x_component, double tol) {
  const int n = 8192;
  auto value = [&](double t) {
    Vec2 v = chain.derivative(t);
    return x_component ? v.x : v.y;
  };
  std::vector<double> params;
  double prev = value(0.0);
  for (int i = 1; i <= n; ++i) {
    double t = kTwoPi * i / n;
    double cur = value(t);
    if ((prev < 0) != (cur < 0)) {
      double a = kTwoPi * (i - 1) / n, b = t;
      for (int k = 0; k < 80; ++k) {
        double mid = 0.5 * (a + b);
        double vm = value(mid);
        if ((vm < 0) == (prev < 0)) {
          a = mid;
        } else {
          b = mid;
        }
      }
      params.push_back(fold(0.5 * (a + b)));
    }
    prev = cur;
  }
  // Tangential zeros (no sign change) still show up as minima of the square.
  for (double t : scan_singular_params(chain, tol)) params.push_back(t);
  return params;
}

}  // namespace

std::vector<ParamPoint> general_singular_points(const Chain& chain) {
  const CanonicalForms f = canonical_forms(chain);
  const Polynomial var = Polynomial::variable();
  const Polynomial A = f.U2.substitute_square() * var;
  const Polynomial B = f.Q2.substitute_square() * var;
  const Polynomial C = f.S2.substitute_square();
  const Polynomial D = f.V2.substitute_square();
  if (A.is_zero() && B.is_zero() && C.is_zero() && D.is_zero()) {
    throw DegenerateChain("both velocity components are identically zero");
  }
  const double tol = 1e-9 * chain.scale();

  std::vector<double> params;
  const bool dy_vanishes = C.is_zero() && D.is_zero();
  const bool dx_vanishes = A.is_zero() && B.is_zero();
  if (dy_vanishes) {
    params = scan_component_zeros(chain, /*x_component=*/true, tol);
  } else if (dx_vanishes) {
    params = scan_component_zeros(chain, /*x_component=*/false, tol);
  } else {
    const Polynomial E = A * D - B * C;
    if (E.is_zero()) {
      params = scan_singular_params(chain, tol);
    } else {
      for (const Root& root : real_roots(E, -1.0, 1.0)) {
        double s0 = std::clamp(root.value, -1.0, 1.0);
        double w = std::sqrt(std::max(0.0, 1.0 - s0 * s0));
        for (double x : {w, -w}) {
          if (std::fabs(A.eval(s0) * x + B.eval(s0)) > tol) continue;
          if (std::fabs(C.eval(s0) * x + D.eval(s0)) > tol) continue;
          double t = fold(std::atan2(s0, x));
          Vec2 v = chain.derivative(t);
          if (std::fabs(v.x) > tol || std::fabs(v.y) > tol) continue;
          params.push_back(t);
        }
      }
    }
  }

  std::sort(params.begin(), params.end());
  std::vector<ParamPoint> out;
  for (double t : params) {
    bool dup = false;
    for (const auto& existing : out) {
      double d = std::fabs(existing.t - t);
      d = std::min(d, kTwoPi - d);
      if (d <= 1e-7) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    out.push_back(ParamPoint{t, chain.eval(t)});
  }
  return out;
}

}  // namespace chaincurve
