#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "chaincurve/chain.hpp"
#include "chaincurve/oracle.hpp"
#include "chaincurve/space_curves.hpp"

namespace chaincurve {

struct CurveFeature {
  std::string kind;   // selfIntersection | singular | zero | foldVertical |
                      // foldHorizontal | smoothVertical | smoothHorizontal
  Vec2 point;
  std::vector<double> params;     // parameters meeting at the point
  int orbit_id = -1;              // shared by members of one symmetry orbit
  std::string classification;     // velocity-based label where applicable
  std::string provenance;         // "analytic" | "oracleSeeded"
};

struct FeatureInventory {
  Chain chain;
  std::vector<CurveFeature> features;
  bool used_two_member_path = false;
  int group_order = 1;
};

// Full feature analysis of a planar chain.  Two-member curves take the
// orbit-decomposition path; everything else runs the axis searches, the
// exact singular solve and an oracle completion pass for features those
// leave out.
FeatureInventory analyze_chain(const Chain& chain, const OracleConfig& config = OracleConfig{});

struct OracleDiff {
  bool consistent = false;
  double max_distance = 0.0;
  std::vector<Vec2> analytic_only;   // analytic features the oracle missed
  std::vector<Vec2> oracle_only;     // oracle findings with no analytic match
};

// Cross-checks the inventory's meeting and singular locations against an
// independent oracle run at 1e-6 relative tolerance.
OracleDiff verify_inventory(const FeatureInventory& inventory,
                            const OracleConfig& config = OracleConfig{});

// Round to 15 significant digits (the round-trip contract for all numeric
// text output).
double sig15(double v);

nlohmann::json inventory_to_json(const FeatureInventory& inventory);
nlohmann::json diff_to_json(const OracleDiff& diff);

// Self-contained SVG plot: the sampled trace plus kind-coded feature
// markers.  Byte-deterministic for fixed inputs.
std::string to_svg(const Chain& chain, const FeatureInventory* inventory, int samples = 4096);

// "t,x,y" (or "t,x,y,z") sample table at 15 significant digits.
std::string to_csv(const Chain& chain, int samples);
std::string to_csv(const SpaceCurve& curve, int samples);

}  // namespace chaincurve
