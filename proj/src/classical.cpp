#include "chaincurve/classical.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "chaincurve/errors.hpp"

namespace chaincurve {

const char* to_string(RollingKind k) {
  switch (k) {
    case RollingKind::epicycloid: return "epicycloid";
    case RollingKind::hypocycloid: return "hypocycloid";
    case RollingKind::epitrochoid: return "epitrochoid";
    case RollingKind::hypotrochoid: return "hypotrochoid";
  }
  return "unknown";
}

RollingConversion to_two_chain(const RollingSpec& spec) {
  if (spec.R <= 0 || spec.r <= 0) throw Error("both radii must be positive");
  if (spec.pen() <= 0) throw Error("the traced point distance must be positive");
  const bool epi =
      spec.kind == RollingKind::epicycloid || spec.kind == RollingKind::epitrochoid;
  if (!epi && spec.R <= spec.r) {
    throw Error("the rolling circle must fit inside the fixed one");
  }
  if (!epi && spec.R == 2 * spec.r) {
    throw DegenerateChain("R = 2r flattens the trace onto a diameter");
  }

  const Rational ratio =
      epi ? Rational((spec.R + spec.r) / spec.r) : Rational((spec.R - spec.r) / spec.r);
  const BigInt p_big = boost::multiprecision::numerator(ratio);
  const BigInt q_big = boost::multiprecision::denominator(ratio);
  if (p_big > 1000000 || q_big > 1000000) {
    throw IrrationalRatio("radius ratio needs a numerator or denominator above 10^6");
  }
  const int p = p_big.convert_to<int>();
  const int q = q_big.convert_to<int>();

  RollingConversion out{
      epi ? TwoChain(Coefficient(spec.R + spec.r), Coefficient(-spec.pen()), q, p)
          : TwoChain(Coefficient(spec.R - spec.r), Coefficient(spec.pen()), -q, p),
      Rational(q), !epi};
  return out;
}

int cusp_count(const RollingSpec& spec) {
  if (!spec.is_cycloid()) {
    throw NotACycloid("cusps exist only when the traced point sits on the rolling circle");
  }
  RollingConversion conv = to_two_chain(spec);
  if (!conv.curve.singular_condition()) {
    throw ConditionNotMet("cycloid conversion failed the exact vanishing condition");
  }
  return conv.curve.Q();
}

}  // namespace chaincurve
