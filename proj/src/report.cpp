#include "chaincurve/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "chaincurve/axis_analysis.hpp"
#include "chaincurve/errors.hpp"
#include "chaincurve/two_chain.hpp"

namespace chaincurve {

namespace {

constexpr double kTwoPi = 2.0 * 3.14159265358979323846;

double circular_gap(double a, double b) {
  double d = std::fabs(a - b);
  return std::min(d, kTwoPi - d);
}

CurveFeature feature_from_axis(const AxisPoint& ap) {
  CurveFeature feat;
  feat.kind = to_string(ap.classification);
  feat.point = ap.location;
  feat.params = {ap.t1};
  if (std::fabs(ap.t1 - ap.t2) > 1e-15) feat.params.push_back(ap.t2);
  feat.classification = to_string(ap.classification);
  feat.provenance = "analytic";
  return feat;
}

}  // namespace

FeatureInventory analyze_chain(const Chain& chain, const OracleConfig& config) {
  FeatureInventory inv;
  inv.chain = chain;

  if (auto two = TwoChain::from_chain(chain)) {
    inv.used_two_member_path = true;
    inv.group_order = two->Q();
    int orbit_id = 0;
    for (const auto& mc : two->self_intersection_classes(config)) {
      for (const auto& member : mc.members) {
        CurveFeature feat;
        feat.kind = to_string(mc.kind);
        feat.point = member.point;
        feat.params = member.s ? std::vector<double>{member.t, *member.s}
                               : std::vector<double>{member.t};
        feat.orbit_id = orbit_id;
        feat.classification = mc.kind == ClassKind::singular && mc.return_point_first_kind
                                  ? "returnPointFirstKind"
                                  : to_string(mc.kind);
        feat.provenance = mc.oracle_seeded ? "oracleSeeded" : "analytic";
        inv.features.push_back(std::move(feat));
      }
      ++orbit_id;
    }
    if (two->singular_condition()) {
      FoldResult folds = two->fold_points();
      for (double t : folds.vertical) {
        inv.features.push_back(CurveFeature{"foldVertical", chain.eval(t), {t}, -1,
                                            "smoothVertical", "analytic"});
      }
      for (double t : folds.horizontal) {
        inv.features.push_back(CurveFeature{"foldHorizontal", chain.eval(t), {t}, -1,
                                            "smoothHorizontal", "analytic"});
      }
    }
    return inv;
  }

  // General path: axis searches, the exact singular solve, then an oracle
  // sweep for whatever has no axis witness.
  std::vector<AxisPoint> axis = x_axis_points(chain);
  if (chain.all_exponents_odd()) {
    std::vector<AxisPoint> ys = y_axis_points(chain);
    axis.insert(axis.end(), ys.begin(), ys.end());
  }
  for (const AxisPoint& ap : axis) inv.features.push_back(feature_from_axis(ap));

  auto has_singular_param = [&](double t) {
    for (const auto& feat : inv.features) {
      if (feat.kind != "singular") continue;
      for (double existing : feat.params) {
        if (circular_gap(existing, t) <= 1e-7) return true;
      }
    }
    return false;
  };
  for (const ParamPoint& pp : general_singular_points(chain)) {
    if (has_singular_param(pp.t)) continue;
    inv.features.push_back(
        CurveFeature{"singular", pp.location, {pp.t}, -1, "singular", "analytic"});
  }

  const double cover_tol = 1e-6 * std::max(1.0, chain.scale());
  auto covered_pair = [&](const IntersectionPair& pair) {
    for (const auto& feat : inv.features) {
      if (std::hypot(feat.point.x - pair.point.x, feat.point.y - pair.point.y) > cover_tol) {
        continue;
      }
      if (feat.params.size() == 2) {
        bool match_direct = circular_gap(feat.params[0], pair.t) <= 1e-5 &&
                            circular_gap(feat.params[1], pair.s) <= 1e-5;
        bool match_swapped = circular_gap(feat.params[0], pair.s) <= 1e-5 &&
                             circular_gap(feat.params[1], pair.t) <= 1e-5;
        if (match_direct || match_swapped) return true;
      } else if (feat.kind == "singular") {
        // A cusp can shed near-coincident parameter pairs in the sweep.
        if (circular_gap(feat.params[0], pair.t) <= 1e-3 &&
            circular_gap(feat.params[0], pair.s) <= 1e-3) {
          return true;
        }
      }
    }
    return false;
  };
  OracleIntersections oracle = find_self_intersections(curve_from_chain(chain), config);
  for (const auto& pair : oracle.intersections) {
    if (covered_pair(pair)) continue;
    inv.features.push_back(CurveFeature{"selfIntersection",
                                        pair.point,
                                        {pair.t, pair.s},
                                        -1,
                                        "selfIntersection",
                                        "oracleSeeded"});
  }
  return inv;
}

OracleDiff verify_inventory(const FeatureInventory& inventory, const OracleConfig& config) {
  const Chain& chain = inventory.chain;
  std::vector<Vec2> analytic;
  int zero_passes = 0;
  for (const auto& feat : inventory.features) {
    if (feat.kind == "zero") ++zero_passes;
  }
  bool origin_recorded = false;
  for (const auto& feat : inventory.features) {
    if (feat.kind == "selfIntersection" || feat.kind == "singular") {
      analytic.push_back(feat.point);
    } else if (feat.kind == "zero" && zero_passes >= 2 && !origin_recorded) {
      // Several passes through the origin make it a meeting point the
      // oracle can see; one pass is invisible to it.
      analytic.push_back(Vec2{0.0, 0.0});
      origin_recorded = true;
    }
  }

  Curve2D curve = curve_from_chain(chain);
  OracleIntersections crossings = find_self_intersections(curve, config);
  std::vector<SingularHit> cusps = find_singular_points(curve, config);
  std::vector<Vec2> observed;
  for (const auto& pair : crossings.intersections) observed.push_back(pair.point);
  for (const auto& hit : cusps) observed.push_back(hit.point);

  double tol = 1e-6 * std::max(1.0, chain.scale());
  MatchReport match = match_point_sets(analytic, observed, tol);
  OracleDiff diff;
  diff.consistent = match.complete;
  diff.max_distance = match.max_match_distance;
  diff.analytic_only = match.unmatched_expected;
  diff.oracle_only = match.unmatched_observed;
  return diff;
}

double sig15(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

namespace {

nlohmann::json point_json(const Vec2& p) {
  return nlohmann::json::array({sig15(p.x), sig15(p.y)});
}

}  // namespace

nlohmann::json inventory_to_json(const FeatureInventory& inventory) {
  nlohmann::json features = nlohmann::json::array();
  for (const auto& feat : inventory.features) {
    nlohmann::json params = nlohmann::json::array();
    for (double t : feat.params) params.push_back(sig15(t));
    features.push_back({{"kind", feat.kind},
                        {"point", point_json(feat.point)},
                        {"params", params},
                        {"orbitId", feat.orbit_id},
                        {"classification", feat.classification},
                        {"provenance", feat.provenance}});
  }
  return nlohmann::json{{"chain", inventory.chain.to_json()},
                        {"groupOrder", inventory.group_order},
                        {"twoMemberPath", inventory.used_two_member_path},
                        {"features", features}};
}

nlohmann::json diff_to_json(const OracleDiff& diff) {
  nlohmann::json analytic_only = nlohmann::json::array();
  for (const auto& p : diff.analytic_only) analytic_only.push_back(point_json(p));
  nlohmann::json oracle_only = nlohmann::json::array();
  for (const auto& p : diff.oracle_only) oracle_only.push_back(point_json(p));
  return nlohmann::json{{"consistent", diff.consistent},
                        {"maxDistance", sig15(diff.max_distance)},
                        {"analyticOnly", analytic_only},
                        {"oracleOnly", oracle_only}};
}

std::string to_svg(const Chain& chain, const FeatureInventory* inventory, int samples) {
  if (samples < 16) throw Error("plot needs at least 16 samples");
  std::vector<Vec2> pts(samples);
  double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
  for (int i = 0; i < samples; ++i) {
    Vec2 p = chain.eval(kTwoPi * i / samples);
    pts[i] = Vec2{p.x, -p.y};  // SVG's y axis points down
    min_x = std::min(min_x, pts[i].x);
    max_x = std::max(max_x, pts[i].x);
    min_y = std::min(min_y, pts[i].y);
    max_y = std::max(max_y, pts[i].y);
  }
  double width = max_x - min_x;
  double height = max_y - min_y;
  if (width <= 0) width = 1.0;
  if (height <= 0) height = 1.0;
  const double pad_x = 0.05 * width;
  const double pad_y = 0.05 * height;
  char buf[256];
  std::string svg;
  svg.reserve(64 * 1024);
  std::snprintf(buf, sizeof(buf),
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6g %.6g %.6g %.6g\">\n",
                min_x - pad_x, min_y - pad_y, width + 2 * pad_x, height + 2 * pad_y);
  svg += buf;
  const double stroke = 0.004 * std::max(width, height);
  std::snprintf(buf, sizeof(buf),
                "<path fill=\"none\" stroke=\"#30506a\" stroke-width=\"%.6g\" d=\"", stroke);
  svg += buf;
  for (int i = 0; i < samples; ++i) {
    std::snprintf(buf, sizeof(buf), "%c%.6g %.6g", i == 0 ? 'M' : 'L', pts[i].x, pts[i].y);
    svg += buf;
  }
  svg += "Z\"/>\n";

  if (inventory != nullptr) {
    const double marker = 0.012 * std::max(width, height);
    for (const auto& feat : inventory->features) {
      const char* color = "#888888";
      double radius = marker;
      if (feat.kind == "selfIntersection") {
        color = "#c43c39";
      } else if (feat.kind == "singular") {
        color = "#7a4ba0";
        radius = 1.3 * marker;
      } else if (feat.kind == "zero") {
        color = "#2f8f4e";
      } else if (feat.kind == "foldVertical" || feat.kind == "smoothVertical") {
        color = "#2a6fb0";
        radius = 0.7 * marker;
      } else if (feat.kind == "foldHorizontal" || feat.kind == "smoothHorizontal") {
        color = "#d07828";
        radius = 0.7 * marker;
      }
      std::snprintf(buf, sizeof(buf),
                    "<circle cx=\"%.6g\" cy=\"%.6g\" r=\"%.6g\" fill=\"%s\"/>\n",
                    feat.point.x, -feat.point.y, radius, color);
      svg += buf;
    }
  }
  svg += "</svg>\n";
  return svg;
}

std::string to_csv(const Chain& chain, int samples) {
  if (samples < 2) throw Error("sample table needs at least 2 rows");
  std::string out = "t,x,y\n";
  for (int i = 0; i < samples; ++i) {
    double t = kTwoPi * i / samples;
    Vec2 p = chain.eval(t);
    out += format_double(t);
    out += ',';
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += '\n';
  }
  return out;
}

std::string to_csv(const SpaceCurve& curve, int samples) {
  if (samples < 2) throw Error("sample table needs at least 2 rows");
  std::string out = "t,x,y,z\n";
  const double period = curve.period();
  for (int i = 0; i < samples; ++i) {
    double t = period * i / samples;
    Vec3 p = curve.eval(t);
    out += format_double(t);
    out += ',';
    out += format_double(p.x);
    out += ',';
    out += format_double(p.y);
    out += ',';
    out += format_double(p.z);
    out += '\n';
  }
  return out;
}

}  // namespace chaincurve
