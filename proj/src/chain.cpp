#include "chaincurve/chain.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "chaincurve/errors.hpp"

namespace chaincurve {

Chain::Chain(std::vector<ChainTerm> terms) : terms_(std::move(terms)) {}

Vec2 Chain::eval(double t) const {
  Vec2 p;
  for (const auto& term : terms_) {
    p.x += term.c.as_double() * std::cos(term.m * t);
    p.y += term.d.as_double() * std::sin(term.m * t);
  }
  return p;
}

Vec2 Chain::derivative(double t) const {
  Vec2 v;
  for (const auto& term : terms_) {
    v.x += -term.c.as_double() * term.m * std::sin(term.m * t);
    v.y += term.d.as_double() * term.m * std::cos(term.m * t);
  }
  return v;
}

Vec2 Chain::second_derivative(double t) const {
  Vec2 a;
  for (const auto& term : terms_) {
    double m2 = static_cast<double>(term.m) * term.m;
    a.x += -term.c.as_double() * m2 * std::cos(term.m * t);
    a.y += -term.d.as_double() * m2 * std::sin(term.m * t);
  }
  return a;
}

Vec2 Chain::third_derivative(double t) const {
  Vec2 j;
  for (const auto& term : terms_) {
    double m3 = static_cast<double>(term.m) * term.m * term.m;
    j.x += term.c.as_double() * m3 * std::sin(term.m * t);
    j.y += -term.d.as_double() * m3 * std::cos(term.m * t);
  }
  return j;
}

double Chain::scale() const {
  double s = 0.0;
  for (const auto& term : terms_) {
    s += std::abs(term.m) * (std::fabs(term.c.as_double()) + std::fabs(term.d.as_double()));
  }
  return s;
}

bool Chain::all_exponents_odd() const {
  for (const auto& term : terms_) {
    if (term.m % 2 == 0) return false;
  }
  return !terms_.empty();
}

int Chain::exponent_gcd() const {
  int g = 0;
  for (const auto& term : terms_) {
    if (term.m != 0 && (!term.c.is_zero() || !term.d.is_zero())) {
      g = std::gcd(g, std::abs(term.m));
    }
  }
  return g;
}

namespace {

// Exact coefficients travel as fraction text, approximate ones as JSON
// numbers: from_json maps the types back to the same exactness provenance,
// so a round trip changes neither the value nor the flag.
nlohmann::json coefficient_to_json(const Coefficient& c) {
  if (c.is_exact()) return c.str();
  return c.as_double();
}

}  // namespace

nlohmann::json Chain::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& term : terms_) {
    arr.push_back({{"m", term.m},
                   {"c", coefficient_to_json(term.c)},
                   {"d", coefficient_to_json(term.d)}});
  }
  return nlohmann::json{{"terms", arr}};
}

namespace {

Coefficient coefficient_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Coefficient::parse(j.get<std::string>());
  if (j.is_number_integer()) return Coefficient(Rational(j.get<long long>()));
  return Coefficient(j.get<double>());
}

}  // namespace

Chain Chain::from_json(const nlohmann::json& j) {
  std::vector<ChainTerm> terms;
  for (const auto& item : j.at("terms")) {
    ChainTerm term;
    term.m = item.at("m").get<int>();
    term.c = item.contains("c") ? coefficient_from_json(item.at("c")) : Coefficient(0);
    term.d = item.contains("d") ? coefficient_from_json(item.at("d")) : Coefficient(0);
    terms.push_back(term);
  }
  return Chain(std::move(terms));
}

double CanonicalForms::x(double t) const {
  double u = std::sin(t) * std::sin(t);
  return std::cos(t) * Q1.eval(u) + U1.eval(u);
}

double CanonicalForms::dx(double t) const {
  double s = std::sin(t);
  double u = s * s;
  return s * (Q2.eval(u) + std::cos(t) * U2.eval(u));
}

double CanonicalForms::y(double t) const {
  double s = std::sin(t);
  double u = s * s;
  return s * (S1.eval(u) + std::cos(t) * V1.eval(u));
}

double CanonicalForms::dy(double t) const {
  double u = std::sin(t) * std::sin(t);
  return std::cos(t) * S2.eval(u) + V2.eval(u);
}

CanonicalForms canonical_forms(const Chain& chain) {
  CanonicalForms f;
  f.all_odd = chain.all_exponents_odd();
  const Polynomial flip({Rational(1), Rational(-1)});  // u -> 1 - u
  for (const auto& term : chain.terms()) {
    const int m = term.m;
    const int a = std::abs(m);
    const Rational c = term.c.value();
    const Rational d = term.d.value() * (m < 0 ? -1 : 1);  // sin(mt) = sgn(m) sin(|m|t)
    if (a == 0) {
      f.U1 = f.U1 + Polynomial::constant(c);
      continue;
    }
    if (a % 2 == 1) {
      const int n = (a - 1) / 2;
      const int sign_n = (n % 2 == 0) ? 1 : -1;
      const Polynomial& p = odd_sin_poly(n);
      Polynomial p_flip = p.compose(flip);
      // cos(|m| t) = (-1)^n P_n(1-u) cos t
      f.Q1 = f.Q1 + p_flip * (c * sign_n);
      // y: d sin(m t) = sgn(m) d P_n(u) sin t
      f.S1 = f.S1 + p * d;
      // x': -c m sin(m t) = -c |m| P_n(u) sin t
      f.Q2 = f.Q2 + p * (c * Rational(-a));
      // y': d m cos(m t) = d m (-1)^n P_n(1-u) cos t
      f.S2 = f.S2 + p_flip * (term.d.value() * Rational(m * sign_n));
    } else {
      const int n = a / 2;
      const auto& [r, g] = even_reduction(n);
      Polynomial g_flip = g.compose(flip);
      // cos(|m| t) = G_n(1-u)
      f.U1 = f.U1 + g_flip * c;
      // y: d sin(m t) = sgn(m) d R_n(u) sin t cos t
      f.V1 = f.V1 + r * d;
      // x': -c m sin(m t) = -c |m| R_n(u) sin t cos t
      f.U2 = f.U2 + r * (c * Rational(-a));
      // y': d m cos(m t) = d m G_n(1-u)
      f.V2 = f.V2 + g_flip * (term.d.value() * Rational(m));
    }
  }
  return f;
}

}  // namespace chaincurve
