#include "chaincurve/rootfind.hpp"

#include <algorithm>
#include <cmath>

#include "chaincurve/errors.hpp"

namespace chaincurve {

namespace {

double coeff_scale(const std::vector<double>& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::fabs(v));
  return m == 0.0 ? 1.0 : m;
}

// Bracketed Newton: bisection fallback whenever the Newton step leaves the
// bracket, iterated until the step stalls at machine precision.  No residual
// shortcut: the caller gates acceptance on the residual separately, and
// stopping early would hand back roots several digits short of what the
// bracket supports.
double polish(const std::vector<double>& f, const std::vector<double>& df, double a, double b,
              double fa, double fb) {
  const int kMaxIter = 200;
  double x = 0.5 * (a + b);
  for (int iter = 0; iter < kMaxIter; ++iter) {
    double fx = eval_poly(f, x);
    if (fx == 0.0) return x;
    if ((fa < 0) != (fx < 0)) {
      b = x;
      fb = fx;
    } else {
      a = x;
      fa = fx;
    }
    double d = eval_poly(df, x);
    double next;
    if (d != 0.0) {
      next = x - fx / d;
      if (next <= a || next >= b) next = 0.5 * (a + b);
    } else {
      next = 0.5 * (a + b);
    }
    if (std::fabs(next - x) <= 1e-16 * std::max(1.0, std::fabs(next))) return next;
    x = next;
  }
  throw NoConvergence("root polish did not converge");
}

// Plain Newton from a starting point already known to sit essentially on a
// root (used to sharpen breakpoint hits); clamped to the interval.
double newton_from(const std::vector<double>& f, const std::vector<double>& df, double x,
                   double lo, double hi) {
  for (int iter = 0; iter < 60; ++iter) {
    double d = eval_poly(df, x);
    if (d == 0.0) break;
    double step = eval_poly(f, x) / d;
    x = std::clamp(x - step, lo, hi);
    if (std::fabs(step) <= 1e-16 * std::max(1.0, std::fabs(x))) break;
  }
  return x;
}

// x^2 roots of f2 u^2 + f1 u + f0 without the cancellation-prone textbook
// formula (the larger-magnitude root is computed first, the other by Vieta).
void quadratic_roots(double f0, double f1, double f2, std::vector<double>& out) {
  double disc = f1 * f1 - 4 * f2 * f0;
  if (disc < 0) return;
  double sq = std::sqrt(disc);
  double w = f1 >= 0 ? -(f1 + sq) / 2 : -(f1 - sq) / 2;
  if (w != 0.0) {
    out.push_back(w / f2);
    out.push_back(f0 / w);
  } else {
    out.push_back(0.0);
    out.push_back(-f1 / f2);
  }
}

// All real roots of the double-coefficient polynomial in [lo, hi], by
// splitting into monotone pieces at the roots of the derivative (found by
// recursion; degrees 1 and 2 close the recursion in closed form).  Monotone
// pieces carry at most one root each, so a sign comparison at the ends is a
// complete test; this is what keeps roots closer than any fixed grid step
// from hiding in one cell.
std::vector<double> roots_by_monotone_pieces(std::vector<double> f, double lo, double hi) {
  std::vector<double> out;
  while (!f.empty() && f.back() == 0.0) f.pop_back();
  if (f.size() <= 1) return out;
  if (f.size() == 2) {
    double x = -f[0] / f[1];
    if (x >= lo && x <= hi) out.push_back(x);
    return out;
  }
  if (f.size() == 3) {
    std::vector<double> both;
    quadratic_roots(f[0], f[1], f[2], both);
    for (double x : both) {
      if (x >= lo && x <= hi) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<double> df(f.size() - 1);
  for (std::size_t k = 1; k < f.size(); ++k) df[k - 1] = static_cast<double>(k) * f[k];

  std::vector<double> breaks = roots_by_monotone_pieces(df, lo, hi);
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const double flat_eps = 1e-13 * coeff_scale(f);
  double px = breaks.front();
  double pv = eval_poly(f, px);
  if (std::fabs(pv) <= flat_eps) out.push_back(px);
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    double cx = breaks[i];
    double cv = eval_poly(f, cx);
    if (std::fabs(cv) <= flat_eps) {
      out.push_back(cx);
    } else if (std::fabs(pv) > flat_eps && (pv < 0) != (cv < 0)) {
      out.push_back(polish(f, df, px, cx, pv, cv));
    }
    px = cx;
    pv = cv;
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Candidate {
  double value;
  bool exact_endpoint;
};

}  // namespace

RootSet real_roots(const Polynomial& p, double lo, double hi, double tol) {
  if (p.is_zero()) throw ZeroPolynomial("cannot isolate roots of the zero polynomial");
  if (lo > hi) std::swap(lo, hi);
  RootSet out;
  if (p.degree() == 0) return out;

  const Polynomial q = p.squarefree_part();
  const Polynomial multiple_factor = Polynomial::gcd(p, p.derivative());
  const std::vector<double> pd = p.to_doubles();
  const std::vector<double> qd = q.to_doubles();
  const std::vector<double> qdd = q.derivative().to_doubles();
  const std::vector<double> gd = multiple_factor.to_doubles();
  const double p_scale = coeff_scale(pd);
  const double g_scale = coeff_scale(gd);

  std::vector<Candidate> found;

  // Exact certification at the interval endpoints.  A root sitting exactly
  // on an endpoint produces no sign change and would evade the search.
  for (double end : {lo, hi}) {
    if (p.eval_exact(rational_from_double(end)) == 0) found.push_back({end, true});
  }

  for (double x : roots_by_monotone_pieces(qd, lo, hi)) {
    found.push_back({newton_from(qd, qdd, x, lo, hi), false});
  }

  std::sort(found.begin(), found.end(),
            [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  const double merge_eps = 1e-9 * std::max(1.0, std::fabs(hi - lo));
  const double accept_abs = tol * p_scale;
  for (const Candidate& cand : found) {
    if (!out.empty() && std::fabs(cand.value - out.back().value) <= merge_eps) {
      if (cand.exact_endpoint) {
        // the certified value wins over any float approximation of it
        out.back().value = cand.value;
        out.back().endpoint = true;
      }
      continue;
    }
    if (!cand.exact_endpoint && std::fabs(eval_poly(pd, cand.value)) > accept_abs) continue;
    Root root;
    root.value = cand.value;
    root.endpoint = cand.exact_endpoint || cand.value == lo || cand.value == hi;
    root.suspected_multiple =
        multiple_factor.degree() >= 1 &&
        std::fabs(eval_poly(gd, cand.value)) <= 1e-6 * g_scale;
    out.push_back(root);
  }
  return out;
}

}  // namespace chaincurve
