#pragma once

#include <json.hpp>

#include <vector>

#include "chaincurve/numeric.hpp"
#include "chaincurve/trigpoly.hpp"

namespace chaincurve {

// One member of the sum: contributes c*cos(m t) to x and d*sin(m t) to y.
struct ChainTerm {
  int m = 0;
  Coefficient c;
  Coefficient d;
};

// The closed curve t -> (sum c_k cos(m_k t), sum d_k sin(m_k t)) on [0, 2pi).
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<ChainTerm> terms);

  const std::vector<ChainTerm>& terms() const { return terms_; }

  Vec2 eval(double t) const;
  Vec2 derivative(double t) const;
  Vec2 second_derivative(double t) const;
  Vec2 third_derivative(double t) const;

  // Natural magnitude of the velocity coefficients: sum |m|(|c| + |d|).
  // Tolerances throughout the library are relative to this.
  double scale() const;

  bool all_exponents_odd() const;

  // gcd of |m| over terms with m != 0 and nonzero coefficients; 0 when no
  // such term exists.
  int exponent_gcd() const;

  nlohmann::json to_json() const;
  static Chain from_json(const nlohmann::json& j);

 private:
  std::vector<ChainTerm> terms_;
};

// The four coordinate functions of a chain written exactly over u = sin^2 t:
//   x(t)  = cos t * Q1(u) + U1(u)
//   x'(t) = sin t * (Q2(u) + cos t * U2(u))
//   y(t)  = sin t * (S1(u) + cos t * V1(u))
//   y'(t) = cos t * S2(u) + V2(u)
// For a chain whose exponents are all odd, U1, V1, U2 and V2 vanish except
// that U2 stays zero only because no even term exists; all_odd records this.
struct CanonicalForms {
  Polynomial Q1, U1;
  Polynomial Q2, U2;
  Polynomial S1, V1;
  Polynomial S2, V2;
  bool all_odd = false;

  double x(double t) const;
  double dx(double t) const;
  double y(double t) const;
  double dy(double t) const;
};

CanonicalForms canonical_forms(const Chain& chain);

}  // namespace chaincurve
