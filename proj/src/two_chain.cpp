#include "chaincurve/two_chain.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chaincurve/axis_analysis.hpp"
#include "chaincurve/errors.hpp"

namespace chaincurve {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double fold(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t -= kTwoPi;
  return t;
}

double circular_gap(double a, double b) {
  double d = std::fabs(a - b);
  return std::min(d, kTwoPi - d);
}

Vec2 rotate(Vec2 p, double angle) {
  double c = std::cos(angle);
  double s = std::sin(angle);
  return Vec2{c * p.x - s * p.y, s * p.x + c * p.y};
}

}  // namespace

const char* to_string(ClassKind k) {
  switch (k) {
    case ClassKind::selfIntersection: return "selfIntersection";
    case ClassKind::singular: return "singular";
    case ClassKind::zero: return "zero";
  }
  return "unknown";
}

ReturnPointTest classify_return_point(const Chain& chain, double t0) {
  ReturnPointTest out;
  const double scale = chain.scale();
  Vec2 acc = chain.second_derivative(t0);
  double acc_norm = std::hypot(acc.x, acc.y);
  out.double_singularity = acc_norm * acc_norm > 1e-9 * scale * scale;
  if (acc_norm == 0.0) return out;
  Vec2 tangent{acc.x / acc_norm, acc.y / acc_norm};
  Vec2 origin = chain.eval(t0);

  out.common_tangent = true;
  out.same_side_of_normal = true;
  out.opposite_sides_of_tangent = true;
  for (double eps : {1e-2, 1e-3}) {
    Vec2 plus = chain.eval(t0 + eps);
    Vec2 minus = chain.eval(t0 - eps);
    Vec2 bp{plus.x - origin.x, plus.y - origin.y};
    Vec2 bm{minus.x - origin.x, minus.y - origin.y};
    double cross_p = tangent.x * bp.y - tangent.y * bp.x;
    double cross_m = tangent.x * bm.y - tangent.y * bm.x;
    double dot_p = tangent.x * bp.x + tangent.y * bp.y;
    double dot_m = tangent.x * bm.x + tangent.y * bm.y;
    double angle_p = std::atan2(std::fabs(cross_p), std::fabs(dot_p));
    double angle_m = std::atan2(std::fabs(cross_m), std::fabs(dot_m));
    if (angle_p > 25.0 * eps || angle_m > 25.0 * eps) out.common_tangent = false;
    if (!(dot_p > 0.0 && dot_m > 0.0)) out.same_side_of_normal = false;
    if (!(cross_p * cross_m < 0.0)) out.opposite_sides_of_tangent = false;
  }
  return out;
}

TwoChain::TwoChain(Coefficient c1, Coefficient c2, int m, int l)
    : c1_(std::move(c1)), c2_(std::move(c2)), m_(m), l_(l) {
  if (m_ == 0 || l_ == 0) throw Error("two-member exponents must be nonzero");
  if (m_ >= l_) throw Error("two-member exponents must satisfy m < l");
  if (std::gcd(std::abs(m_), std::abs(l_)) != 1) {
    throw Error("two-member exponents must be coprime");
  }
  if (c1_.is_zero() || c2_.is_zero()) throw Error("two-member coefficients must be nonzero");
}

Chain TwoChain::to_chain() const {
  return Chain({ChainTerm{m_, c1_, c1_}, ChainTerm{l_, c2_, c2_}});
}

std::optional<TwoChain> TwoChain::from_chain(const Chain& chain) {
  if (chain.terms().size() != 2) return std::nullopt;
  ChainTerm a = chain.terms()[0];
  ChainTerm b = chain.terms()[1];
  if (a.m > b.m) std::swap(a, b);
  if (a.c.value() != a.d.value() || b.c.value() != b.d.value()) return std::nullopt;
  if (a.m == 0 || b.m == 0 || a.m == b.m) return std::nullopt;
  if (std::gcd(std::abs(a.m), std::abs(b.m)) != 1) return std::nullopt;
  if (a.c.is_zero() || b.c.is_zero()) return std::nullopt;
  return TwoChain(a.c, b.c, a.m, b.m);
}

double TwoChain::radius_squared(double t) const {
  double v1 = c1_.as_double();
  double v2 = c2_.as_double();
  return v1 * v1 + v2 * v2 + 2.0 * v1 * v2 * std::cos(Q() * t);
}

std::vector<double> TwoChain::equal_radius_preimages(double t0) const {
  const int q = Q();
  std::vector<double> all;
  for (int k = 0; k < q; ++k) {
    all.push_back(fold(t0 + kTwoPi * k / q));
    all.push_back(fold(-t0 + kTwoPi * k / q));
  }
  std::sort(all.begin(), all.end());
  std::vector<double> out;
  for (double t : all) {
    if (!out.empty() && circular_gap(t, out.back()) <= 1e-12) continue;
    if (!out.empty() && circular_gap(t, out.front()) <= 1e-12) continue;
    out.push_back(t);
  }
  return out;
}

RotationGroup TwoChain::rotation_group(int order, int m) {
  if (order < 1) throw Error("rotation group order must be positive");
  RotationGroup g;
  g.order = order;
  for (int k = 0; k < order; ++k) {
    g.param_shifts.push_back(kTwoPi * k / order);
    g.angles.push_back(fold(kTwoPi * k * m / order));
  }
  return g;
}

double TwoChain::sign_flip_rotation() const { return m_ * kPi / Q(); }

std::vector<double> TwoChain::zeros() const {
  const int q = Q();
  std::vector<double> out;
  if (numerically_equal(c1_, -c2_)) {
    for (int k = 0; k < q; ++k) out.push_back(fold(kTwoPi * k / q));
  } else if (numerically_equal(c1_, c2_)) {
    for (int k = 0; k < q; ++k) out.push_back(fold((2 * k + 1) * kPi / q));
  }
  return out;
}

namespace {

// Sign-aware comparison of m*c1 against +-l*c2, exact when possible.
enum class VelocityBalance { none, positive, negative };  // m c1 = l c2 / = -l c2

VelocityBalance velocity_balance(const Coefficient& c1, const Coefficient& c2, int m, int l) {
  if (c1.is_exact() && c2.is_exact()) {
    Rational lhs = c1.value() * m;
    Rational rhs = c2.value() * l;
    if (lhs == rhs) return VelocityBalance::positive;
    if (lhs == -rhs) return VelocityBalance::negative;
    return VelocityBalance::none;
  }
  double lhs = c1.as_double() * m;
  double rhs = c2.as_double() * l;
  double mag = std::max(1.0, std::fabs(lhs) + std::fabs(rhs));
  if (std::fabs(lhs - rhs) <= 1e-9 * mag) return VelocityBalance::positive;
  if (std::fabs(lhs + rhs) <= 1e-9 * mag) return VelocityBalance::negative;
  return VelocityBalance::none;
}

}  // namespace

bool TwoChain::singular_condition() const {
  return velocity_balance(c1_, c2_, m_, l_) != VelocityBalance::none;
}

std::vector<double> TwoChain::singular_points() const {
  const int q = Q();
  std::vector<double> out;
  switch (velocity_balance(c1_, c2_, m_, l_)) {
    case VelocityBalance::positive:
      for (int k = 0; k < q; ++k) out.push_back(fold((2 * k + 1) * kPi / q));
      break;
    case VelocityBalance::negative:
      for (int k = 0; k < q; ++k) out.push_back(fold(kTwoPi * k / q));
      break;
    case VelocityBalance::none:
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

FoldResult TwoChain::fold_points() const {
  VelocityBalance balance = velocity_balance(c1_, c2_, m_, l_);
  if (balance == VelocityBalance::none) {
    throw ConditionNotMet("fold families require (m c1)^2 = (l c2)^2");
  }
  const int p = std::abs(l_ + m_);
  if (p == 0) throw ConditionNotMet("exponents summing to zero give a degenerate trace");
  const Chain chain = to_chain();
  const double tol = 1e-9 * chain.scale();

  // With m c1 = l c2 the x component flattens at even multiples of pi/(l+m)
  // and the y component at odd multiples; the opposite balance swaps the
  // families.  Every candidate is still checked against the derivative.
  std::vector<double> even_family, odd_family;
  for (int k = 0; k < p; ++k) {
    even_family.push_back(fold(kTwoPi * k / p));
    odd_family.push_back(fold((2 * k + 1) * kPi / p));
  }
  const std::vector<double>& vertical_candidates =
      balance == VelocityBalance::positive ? even_family : odd_family;
  const std::vector<double>& horizontal_candidates =
      balance == VelocityBalance::positive ? odd_family : even_family;

  FoldResult out;
  auto sift = [&](const std::vector<double>& candidates, bool vertical) {
    for (double t : candidates) {
      Vec2 v = chain.derivative(t);
      bool x_still = std::fabs(v.x) <= tol;
      bool y_still = std::fabs(v.y) <= tol;
      if (x_still && y_still) {
        out.removed_singular_collisions.push_back(t);
      } else if (vertical && x_still) {
        out.vertical.push_back(t);
      } else if (!vertical && y_still) {
        out.horizontal.push_back(t);
      }
    }
  };
  sift(vertical_candidates, true);
  sift(horizontal_candidates, false);
  std::sort(out.vertical.begin(), out.vertical.end());
  std::sort(out.horizontal.begin(), out.horizontal.end());
  std::sort(out.removed_singular_collisions.begin(), out.removed_singular_collisions.end());
  return out;
}

std::vector<ModuleClass> TwoChain::self_intersection_classes(const OracleConfig& config) const {
  const Chain chain = to_chain();
  const int q = Q();
  const double scale = std::max(chain.scale(), 1e-12);
  const double point_tol = 1e-9 * std::max(1.0, scale);
  const double cover_tol = 1e-6 * std::max(1.0, scale);
  const RotationGroup group = rotation_group();

  std::vector<ModuleClass> classes;

  auto orbit_from_pair = [&](double t1, double t2, Vec2 base, bool seeded) {
    ModuleClass mc;
    mc.kind = ClassKind::selfIntersection;
    mc.base_point = base;
    mc.t0 = t1;
    mc.s0 = t2;
    mc.group_order = q;
    mc.oracle_seeded = seeded;
    for (int k = 0; k < q; ++k) {
      OrbitMember member;
      member.t = fold(t1 + group.param_shifts[k]);
      member.s = fold(t2 + group.param_shifts[k]);
      member.point = rotate(base, group.angles[k]);
      mc.members.push_back(member);
    }
    return mc;
  };

  auto same_point_set = [&](const ModuleClass& a, const ModuleClass& b) {
    if (a.members.size() != b.members.size()) return false;
    std::vector<bool> used(b.members.size(), false);
    for (const auto& ma : a.members) {
      bool matched = false;
      for (std::size_t j = 0; j < b.members.size(); ++j) {
        if (used[j]) continue;
        if (std::hypot(ma.point.x - b.members[j].point.x,
                       ma.point.y - b.members[j].point.y) <= 10 * point_tol) {
          used[j] = true;
          matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return true;
  };

  const std::vector<double> zero_params = zeros();
  const bool has_zero_class = !zero_params.empty();
  if (has_zero_class) {
    ModuleClass mc;
    mc.kind = ClassKind::zero;
    mc.base_point = Vec2{0.0, 0.0};
    mc.t0 = zero_params.front();
    mc.group_order = q;
    for (double t : zero_params) mc.members.push_back(OrbitMember{t, std::nullopt, chain.eval(t)});
    classes.push_back(std::move(mc));
  }

  if (singular_condition()) {
    const std::vector<double> sp = singular_points();
    ModuleClass mc;
    mc.kind = ClassKind::singular;
    mc.t0 = sp.front();
    mc.base_point = chain.eval(sp.front());
    mc.group_order = q;
    for (double t : sp) mc.members.push_back(OrbitMember{t, std::nullopt, chain.eval(t)});
    ReturnPointTest rp = classify_return_point(chain, sp.front());
    mc.double_singularity = rp.double_singularity;
    mc.return_point_first_kind = rp.first_kind();
    classes.push_back(std::move(mc));
  }

  std::vector<AxisPoint> axis_pts = x_axis_points(chain);
  if (chain.all_exponents_odd()) {
    std::vector<AxisPoint> ys = y_axis_points(chain);
    axis_pts.insert(axis_pts.end(), ys.begin(), ys.end());
  }
  for (const AxisPoint& ap : axis_pts) {
    if (ap.classification != AxisClassification::selfIntersection) continue;
    double r = std::hypot(ap.location.x, ap.location.y);
    if (r <= point_tol && has_zero_class) continue;  // origin lives in the zero class
    ModuleClass mc = orbit_from_pair(ap.t1, ap.t2, ap.location, false);
    bool dup = false;
    for (const auto& existing : classes) {
      if (existing.kind == ClassKind::selfIntersection && same_point_set(existing, mc)) {
        dup = true;
        break;
      }
    }
    if (!dup) classes.push_back(std::move(mc));
  }

  // Independent numeric sweep: anything it finds that no orbit explains
  // becomes a new, explicitly flagged class (this is how classes with no
  // member on either axis enter).
  OracleIntersections oracle = find_self_intersections(curve_from_chain(chain), config);
  auto covered = [&](const Vec2& p) {
    for (const auto& mc : classes) {
      for (const auto& member : mc.members) {
        if (std::hypot(p.x - member.point.x, p.y - member.point.y) <= cover_tol) return true;
      }
    }
    return false;
  };
  for (const auto& pair : oracle.intersections) {
    if (covered(pair.point)) continue;
    classes.push_back(orbit_from_pair(pair.t, pair.s, pair.point, true));
  }
  return classes;
}

}  // namespace chaincurve
