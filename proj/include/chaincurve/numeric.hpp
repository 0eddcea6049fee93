#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

namespace chaincurve {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double norm(const Vec2& v) { return std::hypot(v.x, v.y); }
inline double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

// Exact conversion: every finite double is a dyadic rational.
Rational rational_from_double(double x);

double to_double(const Rational& q);

// Render a double with enough digits to round-trip (15 significant digits
// is the contract for all numeric text output in this project).
std::string format_double(double x);

// Best rational approximation of x with denominator bounded by max_den,
// via the continued-fraction expansion.  Throws IrrationalRatio when the
// approximation error at the bound is still above tol.
Rational rationalize(double x, std::uint64_t max_den = 1000000, double tol = 1e-9);

// A chain coefficient: always carried as an exact rational, plus a flag
// recording whether the caller supplied it exactly (integer or fraction
// text) or as a floating-point value (stored as its exact dyadic image).
// Equality tests pick the appropriate notion from the provenance.
class Coefficient {
 public:
  Coefficient() : value_(0), exact_(true) {}
  Coefficient(int v) : value_(v), exact_(true) {}                      // NOLINT
  Coefficient(const Rational& v) : value_(v), exact_(true) {}          // NOLINT
  Coefficient(double v) : value_(rational_from_double(v)), exact_(false) {}  // NOLINT

  static Coefficient exact(const Rational& v) { return Coefficient(v); }
  static Coefficient approximate(double v) { return Coefficient(v); }

  // Accepts "5", "-3", "2/3", "-7/12", and decimal text like "0.25"
  // (decimal text is exact: 0.25 becomes 1/4).
  static Coefficient parse(const std::string& text);

  const Rational& value() const { return value_; }
  bool is_exact() const { return exact_; }
  double as_double() const { return to_double(value_); }
  bool is_zero() const { return value_ == 0; }

  Coefficient operator-() const {
    Coefficient r;
    r.value_ = -value_;
    r.exact_ = exact_;
    return r;
  }

  std::string str() const;

  // Exact equality when both sides are exact; otherwise a 1e-9 numeric test.
  friend bool numerically_equal(const Coefficient& a, const Coefficient& b);

 private:
  Rational value_;
  bool exact_;
};

bool numerically_equal(const Coefficient& a, const Coefficient& b);

}  // namespace chaincurve
