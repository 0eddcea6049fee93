#pragma once

#include <optional>
#include <vector>

#include "chaincurve/chain.hpp"
#include "chaincurve/oracle.hpp"

namespace chaincurve {

enum class ClassKind { selfIntersection, singular, zero };

const char* to_string(ClassKind k);

struct OrbitMember {
  double t = 0.0;
  std::optional<double> s;  // partner parameter for meetings of two branches
  Vec2 point;
};

// One orbit of a distinguished point under the curve's rotation symmetry.
struct ModuleClass {
  ClassKind kind = ClassKind::selfIntersection;
  Vec2 base_point;
  double t0 = 0.0;
  std::optional<double> s0;
  std::vector<OrbitMember> members;
  int group_order = 1;
  bool oracle_seeded = false;  // discovered numerically, off both axes
  // Populated for singular classes only.
  bool double_singularity = false;
  bool return_point_first_kind = false;
};

struct RotationGroup {
  int order = 1;
  std::vector<double> param_shifts;  // 2 pi k / order
  std::vector<double> angles;        // 2 pi k m / order, folded
};

// Vertical (x' = 0) and horizontal (y' = 0) tangent parameters, after
// removing candidates that coincide with singular parameters.
struct FoldResult {
  std::vector<double> vertical;
  std::vector<double> horizontal;
  std::vector<double> removed_singular_collisions;
};

// Branch geometry at a parameter where the velocity vanishes: the two
// half-branches are compared against the tangent line spanned by the
// acceleration at offsets 1e-2 and 1e-3.
struct ReturnPointTest {
  bool double_singularity = false;      // acceleration does not vanish too
  bool common_tangent = false;          // both branches hug the tangent line
  bool same_side_of_normal = false;     // both leave in the acceleration direction
  bool opposite_sides_of_tangent = false;
  bool first_kind() const {
    return double_singularity && common_tangent && same_side_of_normal &&
           opposite_sides_of_tangent;
  }
};

ReturnPointTest classify_return_point(const Chain& chain, double t0);

// The two-member curve w(t) = c1 e^{i m t} + c2 e^{i l t} with m < l,
// gcd(m, l) = 1 and both coefficients nonzero.  Shifting t by 2 pi / (l - m)
// rotates the trace by 2 pi m / (l - m), which organizes every distinguished
// point into orbits of size l - m.
class TwoChain {
 public:
  TwoChain(Coefficient c1, Coefficient c2, int m, int l);

  const Coefficient& c1() const { return c1_; }
  const Coefficient& c2() const { return c2_; }
  int m() const { return m_; }
  int l() const { return l_; }
  int Q() const { return l_ - m_; }

  Chain to_chain() const;

  // Attempts to view a general chain as a two-member one: exactly two terms,
  // matching cosine and sine coefficients, valid exponents.
  static std::optional<TwoChain> from_chain(const Chain& chain);

  double radius_squared(double t) const;

  // All parameters in [0, 2pi) at the same distance from the origin as t0.
  std::vector<double> equal_radius_preimages(double t0) const;

  static RotationGroup rotation_group(int order, int m);
  RotationGroup rotation_group() const { return rotation_group(Q(), m_); }

  // Angle of the half-step symmetry: shifting t by pi / Q rotates the trace
  // of the companion curve with c2 negated by this angle (reported
  // unreduced, so it can exceed 2 pi).
  double sign_flip_rotation() const;

  // Parameters where the curve passes through the origin: present exactly
  // when c1 = -c2 (at 2 pi k / Q) or c1 = c2 (at (2k+1) pi / Q).
  std::vector<double> zeros() const;

  // True when (m c1)^2 = (l c2)^2, tested exactly for exact coefficients
  // and at 1e-9 otherwise.  Only then do singular parameters exist.
  bool singular_condition() const;

  // Parameters with vanishing velocity: (2k+1) pi / Q when m c1 = l c2,
  // 2 pi k / Q when m c1 = -l c2, empty otherwise.
  std::vector<double> singular_points() const;

  // Vertical and horizontal tangent parameters at 2 pi k / (l + m) and
  // (2k+1) pi / (l + m) (which family is which depends on the sign in the
  // coefficient condition), every candidate verified against the actual
  // derivative and singular collisions removed.  Throws ConditionNotMet
  // when the coefficient condition fails.
  FoldResult fold_points() const;

  // Complete orbit decomposition of the curve's distinguished points:
  // self-intersections (seeded from the axis searches, completed by the
  // numeric oracle), singular parameters and origin passages.
  std::vector<ModuleClass> self_intersection_classes(
      const OracleConfig& config = OracleConfig{}) const;

 private:
  Coefficient c1_, c2_;
  int m_, l_;
};

}  // namespace chaincurve
