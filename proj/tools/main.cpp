#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "chaincurve/classical.hpp"
#include "chaincurve/errors.hpp"
#include "chaincurve/report.hpp"
#include "chaincurve/space_curves.hpp"
#include "chaincurve/spectral.hpp"
#include "chaincurve/trigpoly.hpp"
#include "chaincurve/two_chain.hpp"

namespace {

using chaincurve::Chain;
using chaincurve::Coefficient;
using chaincurve::Rational;
using nlohmann::json;

Chain load_chain(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw chaincurve::Error("cannot open chain file '" + path + "'");
  json j;
  in >> j;
  return Chain::from_json(j);
}

json poly_json(const chaincurve::Polynomial& p) { return p.to_json(); }

json expansion_json(const chaincurve::TrigExpansion& e) {
  return json{{"const", poly_json(e.const_part)},
              {"sin", poly_json(e.sin_part)},
              {"cos", poly_json(e.cos_part)},
              {"sincos", poly_json(e.sincos_part)}};
}

json vec2_json(const chaincurve::Vec2& p) {
  return json::array({chaincurve::sig15(p.x), chaincurve::sig15(p.y)});
}

int run(int argc, char** argv) {
  CLI::App app{"exact feature analysis for periodic chain curves"};
  app.require_subcommand(1);

  auto* reduce = app.add_subcommand("reduce", "multiple-angle reduction of sin/cos(l t)");
  int reduce_l = 1;
  bool reduce_sin_only = false, reduce_cos_only = false;
  reduce->add_option("--l", reduce_l, "angle multiplier")->required();
  reduce->add_flag("--sin", reduce_sin_only, "only the sine reduction");
  reduce->add_flag("--cos", reduce_cos_only, "only the cosine reduction");

  auto* analyze = app.add_subcommand("analyze", "feature inventory of a chain");
  std::string analyze_path;
  bool analyze_verify = false;
  int analyze_samples = 4096;
  analyze->add_option("--chain", analyze_path, "chain JSON file")->required();
  analyze->add_flag("--verify", analyze_verify, "cross-check against the numeric oracle");
  analyze->add_option("--samples", analyze_samples, "oracle sampling resolution");

  auto* classical = app.add_subcommand("classical", "rolling-circle curve conversion");
  std::string cl_kind, cl_R, cl_r, cl_d;
  classical->add_option("--kind", cl_kind, "epicycloid|hypocycloid|epitrochoid|hypotrochoid")
      ->required();
  classical->add_option("--R", cl_R, "fixed circle radius (rational, e.g. 7/3)")->required();
  classical->add_option("--r", cl_r, "rolling circle radius (rational)")->required();
  classical->add_option("--d", cl_d, "traced point distance (rational, defaults to r)");

  auto* torus = app.add_subcommand("torus", "torus knot curve analysis");
  int tk_p = 2, tk_q = 3;
  double tk_R = 3.0, tk_r = 1.0;
  std::optional<double> tk_a;
  torus->add_option("--p", tk_p, "longitude count")->required();
  torus->add_option("--q", tk_q, "meridian count")->required();
  torus->add_option("--R", tk_R, "center-circle radius")->required();
  torus->add_option("--r", tk_r, "tube radius")->required();
  torus->add_option("--a", tk_a, "vertical amplitude (defaults to r)");

  auto* helix = app.add_subcommand("helix", "lifted two-member curve classification");
  std::string hx_path, hx_Q;
  double hx_a = 1.0, hx_theta = 0.0;
  helix->add_option("--chain", hx_path, "two-member chain JSON file")->required();
  helix->add_option("--a", hx_a, "height amplitude")->required();
  helix->add_option("--theta", hx_theta, "height phase");
  helix->add_option("--Q", hx_Q, "height frequency (rational, e.g. 5/2)")->required();

  auto* spectrum = app.add_subcommand("spectrum", "operator spectrum boundary curves");
  std::string sp_terms;
  spectrum->add_option("--terms", sp_terms, "comma list of c:alpha terms, e.g. 2:1,1:2")
      ->required();

  auto* oracle_check = app.add_subcommand("oracle-check", "numeric sweep only");
  std::string oc_path;
  int oc_samples = 4096;
  oracle_check->add_option("--chain", oc_path, "chain JSON file")->required();
  oracle_check->add_option("--samples", oc_samples, "sampling resolution");

  auto* plot = app.add_subcommand("plot", "SVG plot of a chain with feature markers");
  std::string pl_path, pl_out, pl_csv;
  int pl_samples = 4096;
  plot->add_option("--chain", pl_path, "chain JSON file")->required();
  plot->add_option("--out", pl_out, "output SVG path")->required();
  plot->add_option("--csv", pl_csv, "also write a t,x,y sample table here");
  plot->add_option("--samples", pl_samples, "trace resolution");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  chaincurve::OracleConfig config;

  if (app.got_subcommand(reduce)) {
    json out;
    out["l"] = reduce_l;
    if (!reduce_cos_only || reduce_sin_only) out["sin"] = expansion_json(chaincurve::reduce_sin(reduce_l));
    if (!reduce_sin_only || reduce_cos_only) out["cos"] = expansion_json(chaincurve::reduce_cos(reduce_l));
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (app.got_subcommand(analyze)) {
    Chain chain = load_chain(analyze_path);
    config.n_samples = analyze_samples;
    chaincurve::FeatureInventory inv = chaincurve::analyze_chain(chain, config);
    json out = chaincurve::inventory_to_json(inv);
    bool consistent = true;
    if (analyze_verify) {
      chaincurve::OracleDiff diff = chaincurve::verify_inventory(inv, config);
      out["oracleDiff"] = chaincurve::diff_to_json(diff);
      consistent = diff.consistent;
    }
    std::cout << out.dump(2) << "\n";
    return consistent ? 0 : 3;
  }

  if (app.got_subcommand(classical)) {
    chaincurve::RollingSpec spec;
    if (cl_kind == "epicycloid") spec.kind = chaincurve::RollingKind::epicycloid;
    else if (cl_kind == "hypocycloid") spec.kind = chaincurve::RollingKind::hypocycloid;
    else if (cl_kind == "epitrochoid") spec.kind = chaincurve::RollingKind::epitrochoid;
    else if (cl_kind == "hypotrochoid") spec.kind = chaincurve::RollingKind::hypotrochoid;
    else throw chaincurve::Error("unknown rolling kind '" + cl_kind + "'");
    spec.R = Coefficient::parse(cl_R).value();
    spec.r = Coefficient::parse(cl_r).value();
    if (!cl_d.empty()) spec.d = Coefficient::parse(cl_d).value();
    chaincurve::RollingConversion conv = chaincurve::to_two_chain(spec);
    json out{{"kind", chaincurve::to_string(spec.kind)},
             {"chain", conv.curve.to_chain().to_json()},
             {"m", conv.curve.m()},
             {"l", conv.curve.l()},
             {"rollingAngleFactor", conv.q_factor.str()},
             {"parameterReversed", conv.negated},
             {"groupOrder", conv.curve.Q()}};
    if (spec.is_cycloid()) out["cuspCount"] = chaincurve::cusp_count(spec);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (app.got_subcommand(torus)) {
    chaincurve::TorusKnotSpec spec{tk_p, tk_q, tk_R, tk_r, tk_a};
    chaincurve::SpaceCurve fourier = chaincurve::torus_knot_fourier(spec);
    chaincurve::TorusKnotCurve direct = chaincurve::torus_knot_curve(spec);
    bool on_torus = !spec.a || *spec.a == spec.r;
    double residual = 0.0;
    if (on_torus) {
      for (int i = 0; i < 1024; ++i) {
        double t = 2.0 * M_PI * i / 1024;
        chaincurve::Vec3 pt = direct.eval(t);
        double rho = std::hypot(pt.x, pt.y);
        double dev = (spec.R - rho) * (spec.R - rho) + pt.z * pt.z - spec.r * spec.r;
        residual = std::max(residual, std::fabs(dev));
      }
    }
    json crossings = json::array();
    for (const auto& cr : chaincurve::projection_self_intersections(spec)) {
      crossings.push_back({{"t", chaincurve::sig15(cr.t)},
                           {"s", chaincurve::sig15(cr.s)},
                           {"point", vec2_json(cr.point)},
                           {"zGap", chaincurve::sig15(std::fabs(cr.z_t - cr.z_s))}});
    }
    auto envelope = chaincurve::s_torus_envelope(spec);
    json out{{"chain", fourier.planar.to_json()},
             {"heightFrequency", spec.q},
             {"amplitude", chaincurve::sig15(spec.amplitude())},
             {"projectionCrossings", crossings},
             {"crossingCount", crossings.size()},
             {"envelope", json::array({chaincurve::sig15(envelope.first),
                                       chaincurve::sig15(envelope.second)})},
             {"minGridSpeed", chaincurve::sig15(chaincurve::min_speed_on_grid(fourier, 10000))}};
    if (on_torus) out["torusResidual"] = chaincurve::sig15(residual);
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (app.got_subcommand(helix)) {
    Chain chain = load_chain(hx_path);
    auto two = chaincurve::TwoChain::from_chain(chain);
    if (!two) throw chaincurve::Error("helix base must be a two-member chain");
    chaincurve::PeriodicHelix h{*two, hx_a, hx_theta, Coefficient::parse(hx_Q).value()};
    chaincurve::HelixClass cls = chaincurve::classify_helix(h);
    json out{{"class", chaincurve::to_string(cls)},
             {"a", chaincurve::sig15(hx_a)},
             {"theta", chaincurve::sig15(hx_theta)},
             {"Q", Coefficient(h.Q).str()}};
    try {
      chaincurve::EnvelopeBounds env = chaincurve::s_helix_envelope(h);
      out["quadric"] = env.kind == chaincurve::QuadricKind::sum ? "x2+y2+z2" : "x2+y2-z2";
      out["bounds"] = json::array(
          {chaincurve::sig15(env.lower), chaincurve::sig15(env.upper)});
    } catch (const chaincurve::NotSPeriodic&) {
      // no envelope for general lifts
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (app.got_subcommand(spectrum)) {
    std::vector<chaincurve::OperatorTerm> terms;
    std::string rest = sp_terms;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      std::string piece = rest.substr(0, comma);
      if (!piece.empty()) terms.push_back(chaincurve::parse_operator_term(piece));
      if (comma == std::string::npos) break;
      rest = rest.substr(comma + 1);
    }
    chaincurve::BoundaryChains bc = chaincurve::boundary_chains(terms);
    json out{{"upper", bc.upper.to_json()},
             {"lower", bc.lower.to_json()},
             {"denominator", bc.denominator},
             {"exponentScale", bc.exponent_scale}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (app.got_subcommand(oracle_check)) {
    Chain chain = load_chain(oc_path);
    config.n_samples = oc_samples;
    chaincurve::Curve2D curve = chaincurve::curve_from_chain(chain);
    chaincurve::OracleIntersections found = chaincurve::find_self_intersections(curve, config);
    json pairs = json::array();
    for (const auto& pair : found.intersections) {
      pairs.push_back({{"t", chaincurve::sig15(pair.t)},
                       {"s", chaincurve::sig15(pair.s)},
                       {"point", vec2_json(pair.point)},
                       {"tangentAngle", chaincurve::sig15(pair.tangent_angle)}});
    }
    json tangential = json::array();
    for (const auto& pair : found.tangential) {
      tangential.push_back({{"t", chaincurve::sig15(pair.t)},
                            {"s", chaincurve::sig15(pair.s)},
                            {"point", vec2_json(pair.point)}});
    }
    json cusps = json::array();
    for (const auto& hit : chaincurve::find_singular_points(curve, config)) {
      cusps.push_back({{"t", chaincurve::sig15(hit.t)},
                       {"point", vec2_json(hit.point)},
                       {"speed", chaincurve::sig15(hit.speed)}});
    }
    json out{{"intersections", pairs}, {"tangential", tangential}, {"singular", cusps}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  if (app.got_subcommand(plot)) {
    Chain chain = load_chain(pl_path);
    chaincurve::FeatureInventory inv = chaincurve::analyze_chain(chain, config);
    std::ofstream out(pl_out);
    if (!out) throw chaincurve::Error("cannot write '" + pl_out + "'");
    out << chaincurve::to_svg(chain, &inv, pl_samples);
    if (!pl_csv.empty()) {
      std::ofstream csv(pl_csv);
      if (!csv) throw chaincurve::Error("cannot write '" + pl_csv + "'");
      csv << chaincurve::to_csv(chain, pl_samples);
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const chaincurve::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
