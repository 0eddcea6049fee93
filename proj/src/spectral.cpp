#include "chaincurve/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "chaincurve/errors.hpp"

namespace chaincurve {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

OperatorTerm parse_operator_term(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw Error("operator term must look like c:alpha, got '" + text + "'");
  }
  OperatorTerm term;
  term.c = Coefficient::parse(text.substr(0, colon)).as_double();
  term.alpha = Coefficient::parse(text.substr(colon + 1)).value();
  return term;
}

Rational spectral_alpha_from_double(double alpha) {
  try {
    return rationalize(alpha);
  } catch (const IrrationalRatio&) {
    throw NonRationalAlpha("operator exponent " + format_double(alpha) +
                           " has no small rational form");
  }
}

BoundaryChains boundary_chains(const std::vector<OperatorTerm>& terms) {
  if (terms.empty()) throw Error("operator needs at least one term");

  // Merge repeated exponents; each distinct alpha yields one chain member.
  std::vector<OperatorTerm> merged;
  for (const auto& term : terms) {
    bool found = false;
    for (auto& kept : merged) {
      if (kept.alpha == term.alpha) {
        kept.c += term.c;
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(term);
  }

  BigInt lcd = 1;
  for (const auto& term : merged) {
    BigInt den = boost::multiprecision::denominator(term.alpha);
    lcd = lcd / boost::multiprecision::gcd(lcd, den) * den;
  }
  if (lcd > 1000000) throw Error("operator exponents need denominators beyond 10^6");

  std::vector<long long> exponents;
  long long exponent_gcd = 0;
  for (const auto& term : merged) {
    Rational scaled = term.alpha * Rational(lcd);
    BigInt num = boost::multiprecision::numerator(scaled);
    exponents.push_back(num.convert_to<long long>());
    exponent_gcd = std::gcd(exponent_gcd, std::abs(exponents.back()));
  }
  if (exponent_gcd == 0) {
    throw IdentityOperator("every exponent is zero: the operator is a multiple of identity");
  }

  BoundaryChains out;
  out.denominator = lcd.convert_to<long long>();
  out.exponent_scale = static_cast<int>(exponent_gcd);
  std::vector<ChainTerm> upper_terms, lower_terms;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    long long m = exponents[i] / exponent_gcd;
    if (m > 1000000 || m < -1000000) throw Error("operator exponent out of range");
    double up = merged[i].c * std::exp(to_double(merged[i].alpha) * kPi / 2.0);
    double down = merged[i].c * std::exp(-to_double(merged[i].alpha) * kPi / 2.0);
    upper_terms.push_back(
        ChainTerm{static_cast<int>(m), Coefficient(up), Coefficient(up)});
    lower_terms.push_back(
        ChainTerm{static_cast<int>(m), Coefficient(down), Coefficient(down)});
  }
  out.upper = Chain(std::move(upper_terms));
  out.lower = Chain(std::move(lower_terms));
  return out;
}

}  // namespace chaincurve
