#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "chaincurve/numeric.hpp"

namespace chaincurve {

// Univariate polynomial with exact rational coefficients, stored
// little-endian (coeffs()[k] multiplies u^k).  The representation is kept
// normalized: no trailing zero coefficients, so degree() is always honest.
// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }

  static Polynomial constant(const Rational& v) { return Polynomial({v}); }
  // The monomial u.
  static Polynomial variable() { return Polynomial({Rational(0), Rational(1)}); }

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& k) const;
  bool operator==(const Polynomial& o) const { return c_ == o.c_; }
  bool operator!=(const Polynomial& o) const { return c_ != o.c_; }

  Polynomial derivative() const;

  // p.compose(q) is p(q(u)), computed exactly by Horner's scheme.
  Polynomial compose(const Polynomial& q) const;

  // p(u) reinterpreted at u = s^2: returns the polynomial in s whose even
  // coefficients are this one's (odd coefficients zero).
  Polynomial substitute_square() const;

  double eval(double u) const;
  Rational eval_exact(const Rational& u) const;

  // Coefficients converted once for tight numeric loops.
  std::vector<double> to_doubles() const;

  // Exact Euclidean division: first = quotient, second = remainder.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  // Monic greatest common divisor (gcd of anything with zero is the other
  // argument made monic; gcd(0, 0) is zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  // p divided by gcd(p, p'): same roots, all simple.
  Polynomial squarefree_part() const;

  std::string str(const std::string& var = "u") const;

  nlohmann::json to_json() const;
  static Polynomial from_json(const nlohmann::json& j);

 private:
  void normalize();
  std::vector<Rational> c_;
};

// Horner evaluation over pre-converted double coefficients.
double eval_poly(const std::vector<double>& coeffs, double u);

// Horner evaluation with compensated arithmetic (error-free transformations
// through fused multiply-add).  Behaves as if run in twice the working
// precision, which matters for the reduction polynomials: their coefficients
// grow like 4^degree while the values stay O(1), so the plain scheme loses
// up to 9 digits to cancellation by degree 12.
double eval_poly_compensated(const std::vector<double>& coeffs, double u);

}  // namespace chaincurve
