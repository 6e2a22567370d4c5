#pragma once

// Adaptive Simpson with the usual 1/15 Richardson error estimate.
// Accepts a subinterval when |S2 - S1| <= 15 * max(abs_tol_share, rel floor);
// recursion depth is capped so stiff integrands terminate.

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dhs {
namespace detail {

inline double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adapt_step(const F& f, double a, double fa, double b, double fb, double m, double fm,
                  double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  // an overflowed panel cannot be refined; return it as-is so callers see inf
  if (!std::isfinite(delta)) return left + right;
  // rel floor: once delta is at the roundoff of the panel sum, refining is noise
  const double floor = 2e-16 * (std::abs(left) + std::abs(right));
  if (depth <= 0 || std::abs(delta) <= 15.0 * std::max(tol, floor))
    return left + right + delta / 15.0;
  return adapt_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adapt_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <class F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-12, int max_depth = 48) {
  if (!(abs_tol > 0.0)) throw std::invalid_argument("integrate: abs_tol must be > 0");
  if (a == b) return 0.0;
  double sign = 1.0;
  if (b < a) {
    std::swap(a, b);
    sign = -1.0;
  }
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = detail::simpson(a, fa, b, fb, fm);
  return sign * detail::adapt_step(f, a, fa, b, fb, m, fm, whole, abs_tol, max_depth);
}

}  // namespace dhs
