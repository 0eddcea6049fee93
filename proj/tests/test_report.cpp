#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "chaincurve/errors.hpp"
#include "chaincurve/report.hpp"

using chaincurve::analyze_chain;
using chaincurve::Chain;
using chaincurve::Coefficient;
using chaincurve::FeatureInventory;
using chaincurve::OracleDiff;
using chaincurve::Rational;
using chaincurve::sig15;
using chaincurve::SpaceCurve;
using chaincurve::verify_inventory;

namespace {

Chain cardioid() {
  return Chain({{1, Coefficient(2), Coefficient(2)}, {2, Coefficient(-1), Coefficient(-1)}});
}

int count_kind(const FeatureInventory& inv, const std::string& kind) {
  return static_cast<int>(std::count_if(inv.features.begin(), inv.features.end(),
                                        [&](const auto& f) { return f.kind == kind; }));
}

}  // namespace

TEST_CASE("inventory of the one-cusp curve") {
  FeatureInventory inv = analyze_chain(cardioid());
  CHECK(inv.used_two_member_path);
  CHECK(inv.group_order == 1);
  CHECK(count_kind(inv, "singular") == 1);
  CHECK(count_kind(inv, "selfIntersection") == 0);
  CHECK(count_kind(inv, "zero") == 0);
  CHECK(count_kind(inv, "foldVertical") == 3);
  CHECK(count_kind(inv, "foldHorizontal") == 2);

  for (const auto& feat : inv.features) {
    if (feat.kind == "singular") {
      CHECK(feat.classification == "returnPointFirstKind");
      CHECK(feat.point.x == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(feat.provenance == "analytic");
    }
  }
}

TEST_CASE("inventory of the six-member curve") {
  Chain chain({{1, Coefficient(1), Coefficient(1)}, {6, Coefficient(1), Coefficient(1)}});
  FeatureInventory inv = analyze_chain(chain);
  CHECK(inv.used_two_member_path);
  CHECK(inv.group_order == 5);
  CHECK(count_kind(inv, "zero") == 5);
  CHECK(count_kind(inv, "selfIntersection") == 15);

  std::set<int> orbits;
  for (const auto& feat : inv.features) orbits.insert(feat.orbit_id);
  CHECK(orbits.size() == 4);  // one zero orbit, three crossing orbits
}

TEST_CASE("general path inventory") {
  // three members, so the orbit machinery does not apply
  Chain chain({{1, Coefficient(2), Coefficient(3)}, {3, Coefficient(1), Coefficient(1)},
               {5, Coefficient(Rational(1, 4)), Coefficient(Rational(1, 4))}});
  FeatureInventory inv = analyze_chain(chain);
  CHECK_FALSE(inv.used_two_member_path);
  CHECK(inv.group_order == 1);
  for (const auto& feat : inv.features) {
    CHECK((feat.provenance == "analytic" || feat.provenance == "oracleSeeded"));
    CHECK_FALSE(feat.params.empty());
  }

  OracleDiff diff = verify_inventory(inv);
  CHECK(diff.consistent);
}

TEST_CASE("verification agrees on curves with known answers") {
  for (Chain chain : {cardioid(),
                      Chain({{2, Coefficient(1), Coefficient(1)},
                             {3, Coefficient(1), Coefficient(1)}}),
                      Chain({{1, Coefficient(1), Coefficient(1)},
                             {6, Coefficient(1), Coefficient(1)}})}) {
    FeatureInventory inv = analyze_chain(chain);
    OracleDiff diff = verify_inventory(inv);
    CHECK(diff.consistent);
    CHECK(diff.analytic_only.empty());
    CHECK(diff.oracle_only.empty());
  }
}

TEST_CASE("json serialization round-trips the numbers") {
  FeatureInventory inv = analyze_chain(cardioid());
  auto j = chaincurve::inventory_to_json(inv);
  CHECK(j.contains("chain"));
  CHECK(j.contains("features"));
  CHECK(j["features"].size() == inv.features.size());
  CHECK(j["groupOrder"] == 1);
  CHECK(j["twoMemberPath"] == true);

  // every number printed at 15 significant digits parses back to itself
  for (const auto& feat : j["features"]) {
    double x = feat["point"][0].get<double>();
    CHECK(sig15(x) == x);
  }

  OracleDiff diff = verify_inventory(inv);
  auto dj = chaincurve::diff_to_json(diff);
  CHECK(dj["consistent"] == true);
}

TEST_CASE("svg output is self-contained and deterministic") {
  FeatureInventory inv = analyze_chain(cardioid());
  std::string svg = chaincurve::to_svg(inv.chain, &inv, 512);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  CHECK(svg.find("circle") != std::string::npos);

  std::string again = chaincurve::to_svg(inv.chain, &inv, 512);
  CHECK(svg == again);

  // plotting without an inventory still draws the trace
  std::string bare = chaincurve::to_svg(inv.chain, nullptr, 512);
  CHECK(bare.find("<path") != std::string::npos);
}

TEST_CASE("csv sample tables") {
  std::string flat = chaincurve::to_csv(cardioid(), 16);
  CHECK(flat.rfind("t,x,y\n", 0) == 0);
  CHECK(std::count(flat.begin(), flat.end(), '\n') == 17);

  SpaceCurve lifted;
  lifted.planar = cardioid();
  lifted.a = 1.0;
  lifted.Q = Rational(1, 2);
  std::string tall = chaincurve::to_csv(lifted, 16);
  CHECK(tall.rfind("t,x,y,z\n", 0) == 0);
  CHECK(std::count(tall.begin(), tall.end(), '\n') == 17);

  CHECK_THROWS_AS(chaincurve::to_csv(cardioid(), 1), chaincurve::Error);
}

TEST_CASE("sig15 round trip") {
  double third = 1.0 / 3.0;
  double r = sig15(third);
  CHECK(sig15(r) == r);
  CHECK(r == doctest::Approx(third).epsilon(1e-14));
  CHECK(sig15(0.0) == 0.0);
  CHECK(sig15(-2.5) == -2.5);
}
