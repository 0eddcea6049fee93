#include "chaincurve/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chaincurve/errors.hpp"

namespace chaincurve {

void Polynomial::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(c_);
  for (auto& v : out) v = -v;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (c_.empty() || o.c_.empty()) return Polynomial();
  std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& k) const {
  std::vector<Rational> out(c_);
  for (auto& v : out) v *= k;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<Rational> out(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<int>(i));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& q) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * q + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial Polynomial::substitute_square() const {
  if (c_.empty()) return Polynomial();
  std::vector<Rational> out(2 * c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) out[2 * i] = c_[i];
  return Polynomial(std::move(out));
}

double Polynomial::eval(double u) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + to_double(*it);
  return acc;
}

Rational Polynomial::eval_exact(const Rational& u) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

std::vector<double> Polynomial::to_doubles() const {
  std::vector<double> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = to_double(c_[i]);
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  Polynomial rem = *this;
  if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
  std::vector<Rational> q(rem.degree() - divisor.degree() + 1, Rational(0));
  const Rational& lead = divisor.leading();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    int shift = rem.degree() - divisor.degree();
    Rational factor = rem.leading() / lead;
    q[shift] = factor;
    std::vector<Rational> sub(shift + divisor.c_.size(), Rational(0));
    for (std::size_t i = 0; i < divisor.c_.size(); ++i) sub[shift + i] = divisor.c_[i] * factor;
    rem = rem - Polynomial(std::move(sub));
  }
  return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  auto monic = [](Polynomial p) {
    if (p.is_zero()) return p;
    Rational inv = Rational(1) / p.leading();
    return p * inv;
  };
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

Polynomial Polynomial::squarefree_part() const {
  if (is_zero()) return *this;
  if (degree() == 0) return *this;
  Polynomial g = gcd(*this, derivative());
  if (g.degree() <= 0) return *this;
  return divmod(g).first;
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& v = c_[i];
    if (v == 0) continue;
    Rational mag = v < 0 ? Rational(-v) : v;
    if (first) {
      if (v < 0) out << "-";
      first = false;
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1) && i > 0;
    if (!unit) out << mag.str();
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

nlohmann::json Polynomial::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& v : c_) arr.push_back(v.str());
  return nlohmann::json{{"coeffs", arr}};
}

Polynomial Polynomial::from_json(const nlohmann::json& j) {
  std::vector<Rational> coeffs;
  for (const auto& item : j.at("coeffs")) {
    if (item.is_string()) {
      coeffs.push_back(Coefficient::parse(item.get<std::string>()).value());
    } else if (item.is_number_integer()) {
      coeffs.push_back(Rational(item.get<long long>()));
    } else {
      coeffs.push_back(rational_from_double(item.get<double>()));
    }
  }
  return Polynomial(std::move(coeffs));
}

double eval_poly(const std::vector<double>& coeffs, double u) {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double eval_poly_compensated(const std::vector<double>& coeffs, double u) {
  if (coeffs.empty()) return 0.0;
  double acc = coeffs.back();
  double err = 0.0;
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    double prod = acc * u;
    double prod_err = std::fma(acc, u, -prod);
    // Knuth two-sum: exact rounding error of prod + coeffs[i], no magnitude
    // assumption on the operands.
    double sum = prod + coeffs[i];
    double shifted = sum - prod;
    double sum_err = (prod - (sum - shifted)) + (coeffs[i] - shifted);
    acc = sum;
    err = err * u + (prod_err + sum_err);
  }
  return acc + err;
}

}  // namespace chaincurve
