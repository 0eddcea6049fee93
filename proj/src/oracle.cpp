#include "chaincurve/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "chaincurve/errors.hpp"

namespace chaincurve {

namespace {

double fold_period(double t, double period) {
  t = std::fmod(t, period);
  if (t < 0) t += period;
  if (t >= period) t -= period;
  return t;
}

double circular_gap(double a, double b, double period) {
  double d = std::fabs(a - b);
  return std::min(d, period - d);
}

// Distance between segment pq and segment rs, zero when they cross.
double segment_distance(Vec2 p, Vec2 q, Vec2 r, Vec2 s) {
  auto cross = [](Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; };
  Vec2 d1{q.x - p.x, q.y - p.y};
  Vec2 d2{s.x - r.x, s.y - r.y};
  double c1 = cross(d1, Vec2{r.x - p.x, r.y - p.y});
  double c2 = cross(d1, Vec2{s.x - p.x, s.y - p.y});
  double c3 = cross(d2, Vec2{p.x - r.x, p.y - r.y});
  double c4 = cross(d2, Vec2{q.x - r.x, q.y - r.y});
  if (((c1 < 0) != (c2 < 0)) && ((c3 < 0) != (c4 < 0))) return 0.0;  // proper crossing
  auto point_seg = [](Vec2 a, Vec2 u, Vec2 v) {
    Vec2 uv{v.x - u.x, v.y - u.y};
    double len2 = uv.x * uv.x + uv.y * uv.y;
    double h = len2 == 0 ? 0.0
                         : std::clamp(((a.x - u.x) * uv.x + (a.y - u.y) * uv.y) / len2, 0.0, 1.0);
    return std::hypot(a.x - (u.x + h * uv.x), a.y - (u.y + h * uv.y));
  };
  return std::min(std::min(point_seg(p, r, s), point_seg(q, r, s)),
                  std::min(point_seg(r, p, q), point_seg(s, p, q)));
}

}  // namespace

void OracleConfig::validate() const {
  if (n_samples < 256) throw Error("oracle sampling must use at least 256 points");
  if (!(pair_tol > refine_tol)) {
    throw Error("oracle pair tolerance must exceed the refinement tolerance");
  }
  if (!(refine_tol > 0) || !(dedupe_radius > 0) || !(min_param_gap > 0)) {
    throw Error("oracle tolerances must be positive");
  }
}

Curve2D curve_from_chain(const Chain& chain) {
  Curve2D c;
  c.position = [chain](double t) { return chain.eval(t); };
  c.velocity = [chain](double t) { return chain.derivative(t); };
  c.acceleration = [chain](double t) { return chain.second_derivative(t); };
  c.jerk = [chain](double t) { return chain.third_derivative(t); };
  c.scale = std::max(chain.scale(), 1e-12);
  return c;
}

OracleIntersections find_self_intersections(const Curve2D& curve, const OracleConfig& config) {
  config.validate();
  const int n = config.n_samples;
  const double period = curve.period;
  const double h = period / n;

  std::vector<Vec2> pts(n);
  double max_seg = 0.0;
  for (int i = 0; i < n; ++i) pts[i] = curve.position(period * i / n);
  for (int i = 0; i < n; ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % n];
    max_seg = std::max(max_seg, std::hypot(b.x - a.x, b.y - a.y));
  }
  if (max_seg == 0.0) return {};  // the curve is a point

  // Spatial hash over segment bounding boxes; cell edge of one max segment
  // length keeps candidate neighborhoods at the 3x3 block around each cell.
  const double cell = std::max(max_seg, 1e-12);
  std::map<std::pair<long long, long long>, std::vector<int>> grid;
  auto cell_of = [&](double x, double y) {
    return std::make_pair(static_cast<long long>(std::floor(x / cell)),
                          static_cast<long long>(std::floor(y / cell)));
  };
  for (int i = 0; i < n; ++i) {
    const Vec2& a = pts[i];
    const Vec2& b = pts[(i + 1) % n];
    auto lo = cell_of(std::min(a.x, b.x), std::min(a.y, b.y));
    auto hi = cell_of(std::max(a.x, b.x), std::max(a.y, b.y));
    for (long long cx = lo.first; cx <= hi.first; ++cx) {
      for (long long cy = lo.second; cy <= hi.second; ++cy) grid[{cx, cy}].push_back(i);
    }
  }

  const double near_tol = std::max(config.pair_tol * curve.scale, 0.75 * max_seg);
  std::vector<std::pair<int, int>> candidates;
  for (const auto& [key, segs] : grid) {
    for (long long dx = 0; dx <= 1; ++dx) {
      for (long long dy = (dx == 0 ? 0 : -1); dy <= 1; ++dy) {
        auto it = grid.find({key.first + dx, key.second + dy});
        if (it == grid.end()) continue;
        const auto& other = it->second;
        for (int i : segs) {
          for (int j : other) {
            if (j <= i + 1) continue;              // identical or adjacent
            if (i == 0 && j == n - 1) continue;    // wrap-adjacent
            candidates.emplace_back(i, j);
          }
        }
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const double accept = config.refine_tol * curve.scale;
  std::vector<IntersectionPair> accepted;
  for (const auto& [i, j] : candidates) {
    const Vec2& a0 = pts[i];
    const Vec2& a1 = pts[(i + 1) % n];
    const Vec2& b0 = pts[j];
    const Vec2& b1 = pts[(j + 1) % n];
    if (segment_distance(a0, a1, b0, b1) > near_tol) continue;

    double t = h * (i + 0.5);
    double s = h * (j + 0.5);
    auto residual = [&](double tt, double ss) {
      Vec2 p = curve.position(tt);
      Vec2 q = curve.position(ss);
      return Vec2{p.x - q.x, p.y - q.y};
    };
    Vec2 f = residual(t, s);
    double fn = std::hypot(f.x, f.y);
    bool ok = false;
    for (int iter = 0; iter < 80; ++iter) {
      if (fn <= accept) {
        ok = true;
        break;
      }
      Vec2 vt = curve.velocity(t);
      Vec2 vs = curve.velocity(s);
      double det = vt.x * (-vs.y) - (-vs.x) * vt.y;
      if (std::fabs(det) < 1e-14 * curve.scale * curve.scale) break;
      double dt = (f.x * (-vs.y) - (-vs.x) * f.y) / det;
      double ds = (vt.x * f.y - f.x * vt.y) / det;
      double damp = 1.0;
      for (int back = 0; back < 40; ++back) {
        Vec2 g = residual(t - damp * dt, s - damp * ds);
        double gn = std::hypot(g.x, g.y);
        if (gn < fn) {
          t -= damp * dt;
          s -= damp * ds;
          f = g;
          fn = gn;
          break;
        }
        damp *= 0.5;
        if (back == 39) iter = 80;  // no progress at any damping: give up
      }
    }
    if (!ok && fn <= accept) ok = true;
    if (!ok) continue;

    double tf = fold_period(t, period);
    double sf = fold_period(s, period);
    if (tf > sf) std::swap(tf, sf);
    if (circular_gap(tf, sf, period) < config.min_param_gap) continue;

    // A close pair whose short arc passes through a near-stationary
    // parameter is the two sides of one cusp, not a meeting of two
    // branches: the position residual grows only cubically in the half-gap
    // there, so such pairs satisfy the acceptance residual without being
    // intersections.  A genuine meeting this tight would need the velocity
    // to turn around within the arc, forcing a speed dip orders of
    // magnitude above this threshold.
    double forward = sf - tf;
    double arc = std::min(forward, period - forward);
    if (arc < 0.01 * period) {
      double start = forward <= period - forward ? tf : sf;
      double low = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= 256; ++k) {
        Vec2 v = curve.velocity(start + arc * k / 256);
        low = std::min(low, std::hypot(v.x, v.y));
      }
      if (low < 1e-3 * curve.scale) continue;
    }

    IntersectionPair pair;
    pair.t = tf;
    pair.s = sf;
    Vec2 p = curve.position(tf);
    Vec2 q = curve.position(sf);
    pair.point = Vec2{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
    Vec2 vt = curve.velocity(tf);
    Vec2 vs = curve.velocity(sf);
    double cross = vt.x * vs.y - vt.y * vs.x;
    double dot = vt.x * vs.x + vt.y * vs.y;
    pair.tangent_angle = std::atan2(std::fabs(cross), std::fabs(dot));
    accepted.push_back(pair);
  }

  // Deduplicate in parameter space, then split by transversality.
  std::sort(accepted.begin(), accepted.end(), [](const IntersectionPair& a,
                                                 const IntersectionPair& b) {
    return std::tie(a.t, a.s) < std::tie(b.t, b.s);
  });
  OracleIntersections out;
  std::vector<IntersectionPair> unique_pairs;
  for (const auto& pair : accepted) {
    bool dup = false;
    for (const auto& kept : unique_pairs) {
      if (circular_gap(pair.t, kept.t, period) <= config.dedupe_radius &&
          circular_gap(pair.s, kept.s, period) <= config.dedupe_radius) {
        dup = true;
        break;
      }
    }
    if (!dup) unique_pairs.push_back(pair);
  }
  std::sort(unique_pairs.begin(), unique_pairs.end(),
            [](const IntersectionPair& a, const IntersectionPair& b) {
              return std::tie(a.point.x, a.point.y, a.t, a.s) <
                     std::tie(b.point.x, b.point.y, b.t, b.s);
            });
  for (const auto& pair : unique_pairs) {
    if (pair.tangent_angle > 1e-4) {
      out.intersections.push_back(pair);
    } else {
      out.tangential.push_back(pair);
    }
  }
  return out;
}

std::vector<SingularHit> find_singular_points(const Curve2D& curve, const OracleConfig& config) {
  config.validate();
  const int n = config.n_samples;
  const double period = curve.period;
  std::vector<double> speed2(n);
  for (int i = 0; i < n; ++i) {
    Vec2 v = curve.velocity(period * i / n);
    speed2[i] = v.x * v.x + v.y * v.y;
  }
  auto g_and_dg = [&](double t) {
    Vec2 v = curve.velocity(t);
    Vec2 a = curve.acceleration(t);
    double g = v.x * a.x + v.y * a.y;
    double dg;
    if (curve.jerk) {
      Vec2 j = curve.jerk(t);
      dg = a.x * a.x + a.y * a.y + v.x * j.x + v.y * j.y;
    } else {
      const double eps = 1e-6;
      Vec2 v2 = curve.velocity(t + eps);
      Vec2 a2 = curve.acceleration(t + eps);
      dg = ((v2.x * a2.x + v2.y * a2.y) - g) / eps;
    }
    return std::make_pair(g, dg);
  };

  const double attempt_cap = 1e-4 * curve.scale * curve.scale;
  const double accept = config.refine_tol * curve.scale;
  std::vector<SingularHit> hits;
  for (int i = 0; i < n; ++i) {
    double prev = speed2[(i + n - 1) % n];
    double next = speed2[(i + 1) % n];
    if (speed2[i] > prev || speed2[i] > next || speed2[i] > attempt_cap) continue;
    double t = period * i / n;
    for (int iter = 0; iter < 200; ++iter) {
      auto [g, dg] = g_and_dg(t);
      if (dg == 0.0) break;
      double step = g / dg;
      t -= step;
      if (std::fabs(step) <= 1e-16 * std::max(1.0, std::fabs(t))) break;
    }
    Vec2 v = curve.velocity(t);
    double speed = std::hypot(v.x, v.y);
    if (speed * speed > accept * accept) continue;
    SingularHit hit;
    hit.t = fold_period(t, period);
    hit.point = curve.position(hit.t);
    hit.speed = speed;
    hits.push_back(hit);
  }
  std::sort(hits.begin(), hits.end(),
            [](const SingularHit& a, const SingularHit& b) { return a.t < b.t; });
  std::vector<SingularHit> out;
  for (const auto& hit : hits) {
    if (!out.empty() && circular_gap(hit.t, out.back().t, period) <= 1e-6) continue;
    if (!out.empty() && circular_gap(hit.t, out.front().t, period) <= 1e-6) continue;
    out.push_back(hit);
  }
  return out;
}

MatchReport match_point_sets(const std::vector<Vec2>& expected,
                             const std::vector<Vec2>& observed, double tol) {
  MatchReport report;
  report.complete = true;
  auto nearest = [](const Vec2& p, const std::vector<Vec2>& set) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& q : set) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
    return best;
  };
  for (const auto& p : expected) {
    double d = nearest(p, observed);
    if (d > tol) {
      report.complete = false;
      report.unmatched_expected.push_back(p);
    } else {
      report.max_match_distance = std::max(report.max_match_distance, d);
    }
  }
  for (const auto& p : observed) {
    double d = nearest(p, expected);
    if (d > tol) {
      report.complete = false;
      report.unmatched_observed.push_back(p);
    } else {
      report.max_match_distance = std::max(report.max_match_distance, d);
    }
  }
  return report;
}

double hausdorff_distance(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();
  auto one_side = [](const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
    double worst = 0.0;
    for (const auto& p : from) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_side(a, b), one_side(b, a));
}

}  // namespace chaincurve
