#pragma once

#include <functional>
#include <vector>

#include "chaincurve/chain.hpp"
#include "chaincurve/numeric.hpp"

namespace chaincurve {

// Settings for the independent numeric search.  Everything downstream is
// deterministic: fixed sampling, fixed candidate order, stable sorts.
struct OracleConfig {
  int n_samples = 4096;        // polyline resolution (>= 256)
  double pair_tol = 1e-6;      // relative near-miss width for candidate pairs
  double refine_tol = 1e-11;   // relative acceptance residual after polish
  double dedupe_radius = 1e-7; // parameter-space radius merging duplicates
  double min_param_gap = 1e-4; // circular separation required of a pair

  void validate() const;       // throws Error on nonsense
};

// A curve given purely by evaluation callbacks, so the oracle shares no code
// path with the exact analysis it cross-checks.
struct Curve2D {
  std::function<Vec2(double)> position;
  std::function<Vec2(double)> velocity;
  std::function<Vec2(double)> acceleration;  // used by the singular search
  std::function<Vec2(double)> jerk;          // optional; numeric fallback if missing
  double period = 6.283185307179586476925286766559;
  double scale = 1.0;                        // magnitude normalizer for tolerances
};

Curve2D curve_from_chain(const Chain& chain);

struct IntersectionPair {
  double t = 0.0;
  double s = 0.0;           // t < s after folding into [0, period)
  Vec2 point;
  double tangent_angle = 0.0;  // angle between the branch tangent lines, [0, pi/2]
};

struct OracleIntersections {
  std::vector<IntersectionPair> intersections;  // transversal crossings
  std::vector<IntersectionPair> tangential;     // near-parallel meetings, kept apart
};

// All parameter pairs (t, s) with position(t) = position(s), found by a
// polyline sweep (segment crossings and near misses seed damped Newton
// iterations on the 2-variable distance system).
OracleIntersections find_self_intersections(const Curve2D& curve, const OracleConfig& config);

struct SingularHit {
  double t = 0.0;
  Vec2 point;
  double speed = 0.0;
};

// All parameters where the velocity vanishes, found by scanning |velocity|^2
// minima and polishing with Newton on its derivative.
std::vector<SingularHit> find_singular_points(const Curve2D& curve, const OracleConfig& config);

struct MatchReport {
  bool complete = false;         // every expected point observed and vice versa
  double max_match_distance = 0.0;
  std::vector<Vec2> unmatched_expected;
  std::vector<Vec2> unmatched_observed;
};

// Bidirectional nearest-point matching between two point sets at tolerance
// tol (absolute).  Order does not matter; duplicates in either set collapse.
MatchReport match_point_sets(const std::vector<Vec2>& expected,
                             const std::vector<Vec2>& observed, double tol);

// max over a of min over b of |a-b|, symmetrized.  Empty sets give 0 when
// both are empty and infinity otherwise.
double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

}  // namespace chaincurve
