#include "chaincurve/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "chaincurve/errors.hpp"

namespace chaincurve {

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) {
    throw Error("non-finite value cannot be converted to a rational");
  }
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, 0.5 <= |mant| < 1
  // 53 bits of mantissa make mant * 2^53 an exact integer.
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  BigInt num = scaled;
  int e2 = exp - 53;
  if (e2 >= 0) {
    return Rational(num << e2);
  }
  BigInt den = BigInt(1) << (-e2);
  return Rational(num, den);
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", x);
  return std::string(buf);
}

Rational rationalize(double x, std::uint64_t max_den, double tol) {
  if (!std::isfinite(x)) throw IrrationalRatio("non-finite input");
  bool neg = x < 0;
  double v = std::fabs(x);
  // Continued-fraction convergents p/q of v.
  std::uint64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int i = 0; i < 64; ++i) {
    double a_f = std::floor(frac);
    if (a_f > static_cast<double>(std::numeric_limits<std::uint64_t>::max()) / 2) break;
    auto a = static_cast<std::uint64_t>(a_f);
    if (q1 != 0 && a > (max_den - q0) / q1) break;  // next convergent would overflow the bound
    std::uint64_t p2 = a * p1 + p0;
    std::uint64_t q2 = a * q1 + q0;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::fabs(approx - v) <= tol * std::max(1.0, v)) {
      Rational r{BigInt(p1), BigInt(q1)};
      return neg ? -r : r;
    }
    double rem = frac - a_f;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  // Check the last convergent within the bound once more before giving up.
  if (q1 != 0 && q1 <= max_den) {
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    if (std::fabs(approx - v) <= tol * std::max(1.0, v)) {
      Rational r{BigInt(p1), BigInt(q1)};
      return neg ? -r : r;
    }
  }
  throw IrrationalRatio("no rational with denominator <= " + std::to_string(max_den) +
                        " approximates " + format_double(x));
}

namespace {

// BigInt's text constructor honors C-style base prefixes, so "025" would be
// read as octal.  Coefficient text is always decimal: strip redundant
// leading zeros (keeping the sign) before handing the digits over.
BigInt decimal_bigint(const std::string& text) {
  if (text.empty()) throw std::runtime_error("empty integer text");
  bool neg = text[0] == '-';
  std::size_t start = (neg || text[0] == '+') ? 1 : 0;
  std::string mag = text.substr(start);
  if (mag.empty()) throw std::runtime_error("sign without digits");
  std::size_t nz = mag.find_first_not_of('0');
  mag = (nz == std::string::npos) ? "0" : mag.substr(nz);
  BigInt v(mag);
  return neg ? BigInt(-v) : v;
}

}  // namespace

Coefficient Coefficient::parse(const std::string& text) {
  if (text.empty()) throw Error("empty coefficient text");
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num = decimal_bigint(text.substr(0, slash));
      BigInt den = decimal_bigint(text.substr(slash + 1));
      if (den == 0) throw Error("zero denominator in '" + text + "'");
      return Coefficient(Rational(num, den));
    }
    auto dot = text.find('.');
    auto epos = text.find_first_of("eE");
    if (dot == std::string::npos && epos == std::string::npos) {
      return Coefficient(Rational(decimal_bigint(text)));
    }
    if (epos == std::string::npos) {
      // Plain decimal: digits.digits is exactly (digits digits)/10^k.
      std::string digits = text.substr(0, dot) + text.substr(dot + 1);
      std::size_t places = text.size() - dot - 1;
      BigInt num = decimal_bigint(digits);
      BigInt den = 1;
      for (std::size_t i = 0; i < places; ++i) den *= 10;
      return Coefficient(Rational(num, den));
    }
  } catch (const std::runtime_error&) {
    throw Error("cannot parse coefficient '" + text + "'");
  }
  // Scientific notation: fall back to the double value, marked approximate.
  char* end = nullptr;
  double v = std::strtod(text.c_str(), &end);
  if (end == nullptr || *end != '\0') throw Error("cannot parse coefficient '" + text + "'");
  return Coefficient(v);
}

std::string Coefficient::str() const {
  if (exact_) {
    std::string s = value_.str();
    return s;
  }
  return format_double(as_double());
}

bool numerically_equal(const Coefficient& a, const Coefficient& b) {
  if (a.exact_ && b.exact_) return a.value_ == b.value_;
  return std::fabs(a.as_double() - b.as_double()) <= 1e-9;
}

}  // namespace chaincurve
