#include <doctest.h>

#include <cmath>
#include <vector>

#include "chaincurve/chain.hpp"
#include "chaincurve/numeric.hpp"

using chaincurve::canonical_forms;
using chaincurve::CanonicalForms;
using chaincurve::Chain;
using chaincurve::ChainTerm;
using chaincurve::Coefficient;
using chaincurve::Polynomial;
using chaincurve::Rational;
using chaincurve::Vec2;

namespace {

constexpr double kPi = 3.14159265358979323846;

Chain cardioid() {
  return Chain({{1, Coefficient(2), Coefficient(2)}, {2, Coefficient(-1), Coefficient(-1)}});
}

void check_reconstruction(const Chain& chain) {
  CanonicalForms forms = canonical_forms(chain);
  for (int i = 0; i < 256; ++i) {
    double t = 2 * kPi * i / 256.0 + 0.0123;
    Vec2 p = chain.eval(t);
    Vec2 v = chain.derivative(t);
    CHECK(forms.x(t) == doctest::Approx(p.x).epsilon(1e-12));
    CHECK(forms.y(t) == doctest::Approx(p.y).epsilon(1e-12));
    CHECK(forms.dx(t) == doctest::Approx(v.x).epsilon(1e-12));
    CHECK(forms.dy(t) == doctest::Approx(v.y).epsilon(1e-12));
  }
}

}  // namespace

TEST_CASE("evaluation matches the defining sum") {
  Chain chain({{2, Coefficient(1), Coefficient(3)}, {-3, Coefficient(Rational(1, 2)), Coefficient(-1)}});
  for (double t : {0.0, 0.4, 1.9, 3.3, 5.8}) {
    Vec2 p = chain.eval(t);
    CHECK(p.x == doctest::Approx(std::cos(2 * t) + 0.5 * std::cos(-3 * t)).epsilon(1e-15));
    CHECK(p.y == doctest::Approx(3 * std::sin(2 * t) - std::sin(-3 * t)).epsilon(1e-15));
  }
}

TEST_CASE("derivatives match term-by-term differentiation") {
  Chain chain({{1, Coefficient(2), Coefficient(-1)}, {4, Coefficient(Rational(-2, 3)), Coefficient(1)}});
  for (double t : {0.1, 1.0, 2.5, 4.4}) {
    Vec2 v = chain.derivative(t);
    CHECK(v.x == doctest::Approx(-2 * std::sin(t) + 4 * (2.0 / 3.0) * std::sin(4 * t))
                     .epsilon(1e-14));
    CHECK(v.y == doctest::Approx(-std::cos(t) + 4 * std::cos(4 * t)).epsilon(1e-14));

    Vec2 a = chain.second_derivative(t);
    CHECK(a.x == doctest::Approx(-2 * std::cos(t) + 16 * (2.0 / 3.0) * std::cos(4 * t))
                     .epsilon(1e-14));
    CHECK(a.y == doctest::Approx(std::sin(t) - 16 * std::sin(4 * t)).epsilon(1e-14));

    Vec2 j = chain.third_derivative(t);
    CHECK(j.x == doctest::Approx(2 * std::sin(t) - 64 * (2.0 / 3.0) * std::sin(4 * t))
                     .epsilon(1e-14));
    CHECK(j.y == doctest::Approx(std::cos(t) - 64 * std::cos(4 * t)).epsilon(1e-14));
  }
}

TEST_CASE("velocity scale") {
  Chain chain({{2, Coefficient(1), Coefficient(3)}, {-3, Coefficient(Rational(1, 2)), Coefficient(-1)}});
  CHECK(chain.scale() == doctest::Approx(2 * (1 + 3) + 3 * (0.5 + 1)).epsilon(1e-15));
  CHECK(Chain().scale() == 0.0);
}

TEST_CASE("exponent parity and gcd") {
  Chain odd({{1, Coefficient(1), Coefficient(1)}, {-7, Coefficient(1), Coefficient(1)}});
  CHECK(odd.all_exponents_odd());
  CHECK_FALSE(cardioid().all_exponents_odd());
  CHECK_FALSE(Chain().all_exponents_odd());

  Chain sixnine({{6, Coefficient(1), Coefficient(0)}, {9, Coefficient(0), Coefficient(2)}});
  CHECK(sixnine.exponent_gcd() == 3);

  // terms with both coefficients zero do not count
  Chain padded({{5, Coefficient(0), Coefficient(0)}, {10, Coefficient(1), Coefficient(1)}});
  CHECK(padded.exponent_gcd() == 10);
  CHECK(Chain({{0, Coefficient(3), Coefficient(0)}}).exponent_gcd() == 0);
}

TEST_CASE("json round trip keeps exactness") {
  Chain chain({{3, Coefficient(Rational(2, 3)), Coefficient(-2)},
               {0, Coefficient(5), Coefficient(0)}});
  Chain back = Chain::from_json(chain.to_json());
  REQUIRE(back.terms().size() == 2);
  CHECK(back.terms()[0].m == 3);
  CHECK(back.terms()[0].c.value() == Rational(2, 3));
  CHECK(back.terms()[0].c.is_exact());
  CHECK(back.terms()[1].c.value() == Rational(5));

  // doubles come back as approximate coefficients
  Chain approx({{1, Coefficient(0.1), Coefficient(1)}});
  Chain approx_back = Chain::from_json(approx.to_json());
  CHECK_FALSE(approx_back.terms()[0].c.is_exact());
  CHECK(approx_back.terms()[0].c.as_double() == doctest::Approx(0.1).epsilon(1e-15));
}

TEST_CASE("canonical forms of the two-member cusp curve are frozen") {
  CanonicalForms f = canonical_forms(cardioid());
  CHECK_FALSE(f.all_odd);
  CHECK(f.Q1 == Polynomial::constant(Rational(2)));
  CHECK(f.U1 == Polynomial({Rational(-1), Rational(2)}));
  CHECK(f.Q2 == Polynomial::constant(Rational(-2)));
  CHECK(f.U2 == Polynomial::constant(Rational(4)));
  CHECK(f.S1 == Polynomial::constant(Rational(2)));
  CHECK(f.V1 == Polynomial::constant(Rational(-2)));
  CHECK(f.S2 == Polynomial::constant(Rational(2)));
  CHECK(f.V2 == Polynomial({Rational(-2), Rational(4)}));
}

TEST_CASE("canonical forms reconstruct the curve") {
  // odd exponents only
  check_reconstruction(Chain({{1, Coefficient(1), Coefficient(1)},
                              {3, Coefficient(Rational(1, 3)), Coefficient(Rational(1, 3))}}));
  // mixed parity with a negative exponent
  check_reconstruction(Chain({{-2, Coefficient(1), Coefficient(Rational(3, 7))},
                              {3, Coefficient(Rational(-1, 2)), Coefficient(2)},
                              {4, Coefficient(1), Coefficient(-1)}}));
  // constant term and high order
  check_reconstruction(Chain({{0, Coefficient(5), Coefficient(0)},
                              {7, Coefficient(1), Coefficient(-2)},
                              {12, Coefficient(Rational(2, 5)), Coefficient(Rational(1, 9))}}));
  check_reconstruction(cardioid());
}

TEST_CASE("odd-only chains have empty even parts") {
  CanonicalForms f = canonical_forms(
      Chain({{1, Coefficient(1), Coefficient(1)}, {7, Coefficient(1), Coefficient(1)}}));
  CHECK(f.all_odd);
  CHECK(f.U1.is_zero());
  CHECK(f.V1.is_zero());
  CHECK(f.U2.is_zero());
  CHECK(f.V2.is_zero());
}
