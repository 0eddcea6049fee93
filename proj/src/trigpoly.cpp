#include "chaincurve/trigpoly.hpp"

#include <cmath>
#include <cstdlib>
#include <deque>

#include "chaincurve/errors.hpp"

namespace chaincurve {

namespace {

// 1 - u, the change of variable between sin^2 and cos^2.
const Polynomial& one_minus_u() {
  static const Polynomial p({Rational(1), Rational(-1)});
  return p;
}

// 1 - 2u.
const Polynomial& one_minus_2u() {
  static const Polynomial p({Rational(1), Rational(-2)});
  return p;
}

}  // namespace

const Polynomial& odd_sin_poly(int n) {
  if (n < 0 || n > kMaxReductionOrder) {
    throw DegreeLimit("odd reduction order " + std::to_string(n) + " out of range [0, " +
                      std::to_string(kMaxReductionOrder) + "]");
  }
  // deque: callers hold references across later (higher-order) calls, so
  // growing the cache must not move what was already handed out.
  static std::deque<Polynomial> cache = {Polynomial::constant(Rational(1))};
  while (static_cast<int>(cache.size()) <= n) {
    int k = static_cast<int>(cache.size()) - 1;  // building P_{k+1}
    const Polynomial& pk = cache.back();
    Polynomial reflected = pk.compose(one_minus_u());
    int sign = (k % 2 == 0) ? 1 : -1;
    Polynomial next = pk * one_minus_2u() + reflected * one_minus_u() * Rational(2 * sign);
    cache.push_back(next);
  }
  return cache[static_cast<std::size_t>(n)];
}

const std::pair<Polynomial, Polynomial>& even_reduction(int n) {
  if (n < 1 || n > kMaxReductionOrder) {
    throw DegreeLimit("even reduction order " + std::to_string(n) + " out of range [1, " +
                      std::to_string(kMaxReductionOrder) + "]");
  }
  static std::deque<std::pair<Polynomial, Polynomial>> cache = {
      {Polynomial::constant(Rational(2)),                  // R_1 = 2
       Polynomial({Rational(-1), Rational(2)})}};          // G_1 = 2u - 1
  while (static_cast<int>(cache.size()) < n) {
    const auto& [rk, gk] = cache.back();
    Polynomial r_next = rk * one_minus_2u() + gk.compose(one_minus_u()) * Rational(2);
    Polynomial g_next =
        -(gk * one_minus_2u()) -
        rk.compose(one_minus_u()) * one_minus_u() * Polynomial::variable() * Rational(2);
    cache.emplace_back(std::move(r_next), std::move(g_next));
  }
  return cache[static_cast<std::size_t>(n - 1)];
}

double TrigExpansion::eval(double t) const {
  double s = std::sin(t);
  double c = std::cos(t);
  double u = s * s;
  return const_part.eval(u) + s * sin_part.eval(u) + c * cos_part.eval(u) +
         s * c * sincos_part.eval(u);
}

TrigExpansion TrigExpansion::operator+(const TrigExpansion& o) const {
  return {const_part + o.const_part, sin_part + o.sin_part, cos_part + o.cos_part,
          sincos_part + o.sincos_part};
}

TrigExpansion TrigExpansion::operator*(const Rational& k) const {
  return {const_part * k, sin_part * k, cos_part * k, sincos_part * k};
}

TrigExpansion reduce_sin(int l) {
  if (l == 0) return TrigExpansion{};
  if (l < 0) return reduce_sin(-l) * Rational(-1);
  TrigExpansion out;
  if (l % 2 == 1) {
    out.sin_part = odd_sin_poly((l - 1) / 2);
  } else {
    out.sincos_part = even_reduction(l / 2).first;
  }
  return out;
}

TrigExpansion reduce_cos(int l) {
  l = std::abs(l);
  TrigExpansion out;
  if (l == 0) {
    out.const_part = Polynomial::constant(Rational(1));
    return out;
  }
  if (l % 2 == 1) {
    int n = (l - 1) / 2;
    int sign = (n % 2 == 0) ? 1 : -1;
    // cos(l t) = (-1)^n P_n(cos^2 t) cos t, and cos^2 t = 1 - u.
    out.cos_part = odd_sin_poly(n).compose(Polynomial({Rational(1), Rational(-1)})) *
                   Rational(sign);
  } else {
    out.const_part =
        even_reduction(l / 2).second.compose(Polynomial({Rational(1), Rational(-1)}));
  }
  return out;
}

}  // namespace chaincurve
