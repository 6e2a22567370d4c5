#pragma once

// Index functions a(lambda): the weights that define variable-Hilbert-scale
// norms. The closed-form families used throughout are
//
//   Exp            a(l) = exp(l)
//   PowerPlusOne   a(l) = (1+l)^g
//   OnePlusPower   a(l) = 1 + l^g
//   ExpSqrt        a(l) = exp(2 sqrt(l))
//   PowerLaw       a(l) = l^p        (a(0) = 0, so not scale-admissible)
//   Tabulated      monotone table with a monotone cubic interpolant
//
// plus the generator that builds a Tabulated a from a scaling profile alpha:
//   a(l) = 1 + c * int_0^l exp( int_1^t alpha(s) ds ) dt,  c > 0.
//
// Admissible scale generators satisfy a(0) = 1 and increase monotonically;
// PowerLaw is carried only for classical power-scale comparisons and is
// rejected where a(0) = 1 is required.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dhs/peak_model.hpp"
#include "dhs/quadrature.hpp"

namespace dhs {

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw std::invalid_argument("log_grid: need 0 < lo < hi, n >= 2");
  std::vector<double> g(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) / static_cast<double>(n - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

inline std::vector<double> lin_grid(double lo, double hi, std::size_t n) {
  if (!(hi > lo) || n < 2) throw std::invalid_argument("lin_grid: need lo < hi, n >= 2");
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i)
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  g.back() = hi;
  return g;
}

class IndexFunction {
 public:
  enum class Kind { One, Exp, PowerPlusOne, OnePlusPower, ExpSqrt, PowerLaw, Tabulated };

  // the constant weight 1 (any admissible family dilated by s = 0)
  static IndexFunction one() { return IndexFunction(Kind::One, 0.0); }

  static IndexFunction exponential() { return IndexFunction(Kind::Exp, 0.0); }

  static IndexFunction power_plus_one(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("power_plus_one: gamma must be > 0");
    return IndexFunction(Kind::PowerPlusOne, gamma);
  }

  static IndexFunction one_plus_power(double gamma) {
    if (!(gamma >= 1.0)) throw std::invalid_argument("one_plus_power: gamma must be >= 1");
    return IndexFunction(Kind::OnePlusPower, gamma);
  }

  static IndexFunction exp_sqrt() { return IndexFunction(Kind::ExpSqrt, 0.0); }

  // p < 0 is admitted for the classical-scale weights lambda^{-m}
  static IndexFunction power_law(double p) {
    if (!std::isfinite(p) || p == 0.0) throw std::invalid_argument("power_law: p must be nonzero");
    return IndexFunction(Kind::PowerLaw, p);
  }

  static IndexFunction tabulated(std::vector<double> lambdas, std::vector<double> values) {
    IndexFunction a(Kind::Tabulated, 0.0);
    a.init_table(std::move(lambdas), std::move(values));
    return a;
  }

  Kind kind() const { return kind_; }
  double param() const { return p_; }
  double dilation() const { return s_; }

  // the weight lambda -> a(s lambda), as its own index function
  IndexFunction dilated(double s) const {
    if (!(s >= 0.0)) throw std::domain_error("dilated: s must be >= 0");
    IndexFunction b = *this;
    b.s_ *= s;
    return b;
  }

  // PowerLaw has a(0) = 0 and cannot generate a dilational scale.
  bool dhs_admissible() const { return kind_ != Kind::PowerLaw; }

  double operator()(double lambda_in) const {
    if (!(lambda_in >= 0.0)) throw std::domain_error("index function: lambda must be >= 0");
    const double lambda = s_ * lambda_in;
    switch (kind_) {
      case Kind::One: return 1.0;
      case Kind::Exp: return std::exp(lambda);
      case Kind::PowerPlusOne: return std::pow(1.0 + lambda, p_);
      case Kind::OnePlusPower: return 1.0 + std::pow(lambda, p_);
      case Kind::ExpSqrt: return std::exp(2.0 * std::sqrt(lambda));
      case Kind::PowerLaw:
        // pow(0, p) is 0 for p > 0 and +inf for p < 0; both are the right
        // limits for weighted norms, so no special-casing at lambda = 0.
        return std::pow(lambda, p_);
      case Kind::Tabulated: return eval_table(lambda);
    }
    throw std::logic_error("index function: bad kind");
  }

  // Smallest lambda with a(lambda) = y, to 1e-12 in lambda for tables.
  double inverse(double y) const {
    if (s_ != 1.0) {
      if (s_ == 0.0) throw std::domain_error("inverse: constant weight is not invertible");
      IndexFunction b = *this;
      b.s_ = 1.0;
      return b.inverse(y) / s_;
    }
    switch (kind_) {
      case Kind::One: throw std::domain_error("inverse: constant weight is not invertible");
      case Kind::Exp:
        if (!(y >= 1.0)) throw std::domain_error("inverse: y below a(0) = 1");
        return std::log(y);
      case Kind::PowerPlusOne:
        if (!(y >= 1.0)) throw std::domain_error("inverse: y below a(0) = 1");
        return std::pow(y, 1.0 / p_) - 1.0;
      case Kind::OnePlusPower:
        if (!(y >= 1.0)) throw std::domain_error("inverse: y below a(0) = 1");
        return std::pow(y - 1.0, 1.0 / p_);
      case Kind::ExpSqrt: {
        if (!(y >= 1.0)) throw std::domain_error("inverse: y below a(0) = 1");
        const double r = 0.5 * std::log(y);
        return r * r;
      }
      case Kind::PowerLaw:
        if (!(y >= 0.0)) throw std::domain_error("inverse: y must be >= 0");
        return std::pow(y, 1.0 / p_);
      case Kind::Tabulated: return invert_table(y);
    }
    throw std::logic_error("index function: bad kind");
  }

  const std::vector<double>& table_lambdas() const { return xs_; }
  const std::vector<double>& table_values() const { return ys_; }

 private:
  IndexFunction(Kind k, double p) : kind_(k), p_(p) {}

  void init_table(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
      throw std::invalid_argument("tabulated: need matching lambda/value columns, length >= 2");
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!std::isfinite(xs[i]) || !std::isfinite(ys[i]))
        throw std::invalid_argument("tabulated: non-finite table entry");
      if (i > 0 && !(xs[i] > xs[i - 1]))
        throw std::invalid_argument("tabulated: lambdas must be strictly ascending");
      if (i > 0 && !(ys[i] >= ys[i - 1]))
        throw std::invalid_argument("tabulated: values must be nondecreasing");
      if (!(ys[i] > 0.0)) throw std::invalid_argument("tabulated: values must be positive");
    }
    if (!(xs.front() >= 0.0)) throw std::invalid_argument("tabulated: lambdas must be >= 0");
    xs_ = std::move(xs);
    ys_ = std::move(ys);
    build_slopes();
  }

  // Monotone cubic interpolation: harmonic-mean node slopes keep the
  // interpolant nondecreasing (Fritsch-Carlson region), with clipped
  // three-point end slopes.
  void build_slopes() {
    const std::size_t n = xs_.size();
    slopes_.assign(n, 0.0);
    if (n == 2) {
      slopes_[0] = slopes_[1] = (ys_[1] - ys_[0]) / (xs_[1] - xs_[0]);
      return;
    }
    std::vector<double> h(n - 1), d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      h[i] = xs_[i + 1] - xs_[i];
      d[i] = (ys_[i + 1] - ys_[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (d[i - 1] * d[i] <= 0.0) {
        slopes_[i] = 0.0;
      } else {
        const double w1 = 2.0 * h[i] + h[i - 1];
        const double w2 = h[i] + 2.0 * h[i - 1];
        slopes_[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
      }
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
      double m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
      if (m * d0 <= 0.0) return 0.0;
      if (d0 * d1 < 0.0 && std::abs(m) > 3.0 * std::abs(d0)) return 3.0 * d0;
      return std::min(std::abs(m), 3.0 * std::abs(d0)) * (d0 < 0.0 ? -1.0 : 1.0);
    };
    slopes_[0] = end_slope(h[0], h[1], d[0], d[1]);
    slopes_[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
  }

  double eval_table(double x) const {
    if (x < xs_.front() || x > xs_.back())
      throw std::domain_error("tabulated index function evaluated outside its table");
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    const std::size_t i = (it == xs_.end() ? xs_.size() - 1 : static_cast<std::size_t>(it - xs_.begin())) - 1;
    const double h = xs_[i + 1] - xs_[i];
    const double t = (x - xs_[i]) / h;
    const double t2 = t * t, t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * ys_[i] + (t3 - 2.0 * t2 + t) * h * slopes_[i] +
           (-2.0 * t3 + 3.0 * t2) * ys_[i + 1] + (t3 - t2) * h * slopes_[i + 1];
  }

  double invert_table(double y) const {
    if (!(y >= ys_.front()) || !(y <= ys_.back()))
      throw std::domain_error("inverse: y outside tabulated range");
    if (y <= eval_table(xs_.front())) return xs_.front();
    // smallest lambda with a(lambda) >= y
    double lo = xs_.front(), hi = xs_.back();
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // interval below ulp resolution
      if (eval_table(mid) >= y)
        hi = mid;
      else
        lo = mid;
    }
    return hi;
  }

  Kind kind_;
  double p_;
  double s_ = 1.0;  // input dilation: this(lambda) = base(s_ * lambda)
  std::vector<double> xs_, ys_, slopes_;
};

// phi(lambda) = a(s lambda), the dilation that sweeps out the scale.
inline double eval_dilated(const IndexFunction& a, double s, double lambda) {
  if (!(s >= 0.0) || !(lambda >= 0.0))
    throw std::domain_error("eval_dilated: s and lambda must be >= 0");
  return a(s * lambda);
}

class AlphaFunction {
 public:
  enum class Kind { Constant, Reciprocal1p, Powerlaw, Rational, Custom };

  static AlphaFunction constant() { return AlphaFunction(Kind::Constant, 0.0, {}); }
  static AlphaFunction reciprocal1p() { return AlphaFunction(Kind::Reciprocal1p, 0.0, {}); }
  static AlphaFunction powerlaw(double gamma) {
    if (!(gamma > 0.0)) throw std::invalid_argument("alpha powerlaw: gamma must be > 0");
    return AlphaFunction(Kind::Powerlaw, gamma, {});
  }
  static AlphaFunction rational() { return AlphaFunction(Kind::Rational, 0.0, {}); }
  static AlphaFunction custom(std::function<double(double)> f) {
    if (!f) throw std::invalid_argument("alpha custom: empty callable");
    return AlphaFunction(Kind::Custom, 0.0, std::move(f));
  }

  Kind kind() const { return kind_; }
  double param() const { return p_; }

  double operator()(double lambda) const {
    if (!(lambda > 0.0)) throw std::domain_error("alpha: lambda must be > 0");
    switch (kind_) {
      case Kind::Constant: return 1.0;
      case Kind::Reciprocal1p: return 1.0 / (1.0 + lambda);
      case Kind::Powerlaw: return (p_ - 1.0) / lambda;
      case Kind::Rational: return (1.0 - 0.5 / std::sqrt(lambda)) / std::sqrt(lambda);
      case Kind::Custom: return fn_(lambda);
    }
    throw std::logic_error("alpha: bad kind");
  }

 private:
  AlphaFunction(Kind k, double p, std::function<double(double)> f)
      : kind_(k), p_(p), fn_(std::move(f)) {}
  Kind kind_;
  double p_;
  std::function<double(double)> fn_;
};

namespace detail {

// int_1^t alpha(s) ds. The profiles whose integral is improper at 0
// (powerlaw and rational both carry a log-divergent 1/s component) get their
// closed forms; everything else integrates from a 1e-12 floor.
inline double alpha_inner_integral(const AlphaFunction& alpha, double t) {
  const double floor = 1e-12;
  if (alpha.kind() == AlphaFunction::Kind::Powerlaw)
    return (alpha.param() - 1.0) * std::log(std::max(t, floor));
  if (alpha.kind() == AlphaFunction::Kind::Rational) {
    const double tc = std::max(t, floor);
    return 2.0 * std::sqrt(tc) - 2.0 - 0.5 * std::log(tc);
  }
  const double tc = std::max(t, floor);
  if (tc == 1.0) return 0.0;
  const double est = std::abs(std::log(tc));  // scale hint for the tolerance
  const double tol = std::max(1e-14, 1e-11 * std::max(est, 1.0));
  return integrate([&](double s) { return alpha(std::max(s, floor)); }, 1.0, tc, tol);
}

}  // namespace detail

// a(lambda) = 1 + c int_0^lambda exp(int_1^t alpha) dt on n+1 uniform nodes.
// The constant appears inside a logarithm in the underlying construction, so
// c must be strictly positive (c = 0 would also freeze a at 1).
inline IndexFunction generate_from_alpha(const AlphaFunction& alpha, double c, double lambda_max,
                                         int n) {
  if (!(c > 0.0)) throw std::invalid_argument("generate_from_alpha: c must be > 0");
  if (!(lambda_max > 0.0)) throw std::invalid_argument("generate_from_alpha: lambda_max must be > 0");
  if (n < 64) throw std::invalid_argument("generate_from_alpha: need n >= 64 nodes");

  auto growth = [&](double t) { return std::exp(detail::alpha_inner_integral(alpha, t)); };

  std::vector<double> xs(static_cast<std::size_t>(n) + 1), ys(xs.size());
  xs[0] = 0.0;
  ys[0] = 1.0;
  double acc = 0.0;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    xs[i] = lambda_max * static_cast<double>(i) / static_cast<double>(n);
    const double mid = growth(0.5 * (xs[i - 1] + xs[i]));
    const double seg_est = std::abs(mid) * (xs[i] - xs[i - 1]);
    const double tol = std::max(1e-15, 1e-10 * std::max(seg_est, 1e-3));
    acc += integrate(growth, xs[i - 1], xs[i], tol);
    if (!std::isfinite(acc))
      throw std::invalid_argument("generate_from_alpha: non-finite growth on grid");
    ys[i] = 1.0 + c * acc;
  }
  return IndexFunction::tabulated(std::move(xs), std::move(ys));
}

struct ScalingReport {
  double max_violation = 0.0;
  bool ok = false;
};

// alpha(sigma lambda) <= alpha(lambda)/sigma for sigma in (0,1]. The raw
// worst violation is reported; the pass flag compares it against the local
// magnitude so exact-equality profiles are not failed on roundoff.
inline ScalingReport check_alpha_scaling(const AlphaFunction& alpha,
                                         const std::vector<double>& lambda_grid,
                                         const std::vector<double>& sigma_grid) {
  ScalingReport rep;
  rep.max_violation = -std::numeric_limits<double>::infinity();
  double worst_rel = -std::numeric_limits<double>::infinity();
  for (double l : lambda_grid)
    for (double s : sigma_grid) {
      if (!(l > 0.0) || !(s > 0.0) || s > 1.0)
        throw std::domain_error("check_alpha_scaling: need lambda > 0, sigma in (0,1]");
      const double lhs = alpha(s * l);
      const double rhs = alpha(l) / s;
      rep.max_violation = std::max(rep.max_violation, lhs - rhs);
      worst_rel = std::max(worst_rel, (lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
  rep.ok = worst_rel <= 1e-12;
  return rep;
}

struct Cond9Report {
  double min_margin = 0.0;
  double max_margin = 0.0;
  bool ok = false;
};

// Multiplicative splitting a(lambda) <= a(tau lambda) a(rho lambda); the
// margin is the right side minus the left. Raw margins are reported; the
// pass flag scales by a(lambda), since at equality loci the raw margin of an
// exp-sized value cannot beat absolute 1e-12 in doubles.
inline Cond9Report check_cond9(const IndexFunction& a, double tau, double rho,
                               const std::vector<double>& lambda_grid) {
  if (!(tau > 0.0) || tau >= 1.0 || !(rho > 0.0) || rho >= 1.0)
    throw std::domain_error("check_cond9: tau, rho must lie in (0,1)");
  Cond9Report rep;
  rep.min_margin = std::numeric_limits<double>::infinity();
  rep.max_margin = -std::numeric_limits<double>::infinity();
  double worst_rel = std::numeric_limits<double>::infinity();
  for (double l : lambda_grid) {
    if (!(l > 0.0)) throw std::domain_error("check_cond9: grid must be positive");
    const double lhs = a(l);
    const double m = a(tau * l) * a(rho * l) - lhs;
    rep.min_margin = std::min(rep.min_margin, m);
    rep.max_margin = std::max(rep.max_margin, m);
    worst_rel = std::min(worst_rel, m / std::max(1.0, lhs));
  }
  rep.ok = worst_rel >= -1e-12;
  return rep;
}

struct ConvexityReport {
  double max_violation = 0.0;
  bool ok = false;
};

// Midpoint convexity of theta(y) = a(a^{-1}(y)/sigma) on the mapped grid
// y_i = a(sigma lambda_i). theta is the function whose convexity licenses the
// dilational interpolation inequality at this sigma.
inline ConvexityReport check_convexity_psi_phi_inv(const IndexFunction& a, double sigma,
                                                   const std::vector<double>& lambda_grid) {
  if (!(sigma > 0.0) || sigma > 1.0)
    throw std::domain_error("check_convexity_psi_phi_inv: sigma must lie in (0,1]");
  // on the mapped grid, theta(y_i) = a(lambda_i) with y_i = a(sigma lambda_i)
  std::vector<double> ys, th;
  ys.reserve(lambda_grid.size());
  th.reserve(lambda_grid.size());
  for (double l : lambda_grid) {
    ys.push_back(a(sigma * l));
    th.push_back(a(l));
  }
  auto theta = [&](double y) { return a(a.inverse(y) / sigma); };

  ConvexityReport rep;
  rep.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ys.size(); ++i)
    for (std::size_t j = i + 1; j < ys.size(); ++j) {
      const double chord = 0.5 * (th[i] + th[j]);
      const double mid = theta(0.5 * (ys[i] + ys[j]));
      const double scale = std::max(1.0, std::abs(chord));
      rep.max_violation = std::max(rep.max_violation, (mid - chord) / scale);
    }
  rep.ok = rep.max_violation <= 1e-10;
  return rep;
}

struct ConcaveWitness {
  std::function<double(double)> fn;
  std::vector<double> grid;
  double max_violation = 0.0;
  bool ok = false;
};

// All-pairs midpoint certificate: fn((x+y)/2) >= (fn(x)+fn(y))/2 - tol.
inline ConcaveWitness make_concave_witness(std::function<double(double)> fn,
                                           std::vector<double> grid, double tol = 1e-12) {
  if (!fn || grid.size() < 2) throw std::invalid_argument("concave witness: need fn and grid");
  ConcaveWitness w;
  w.max_violation = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = i + 1; j < grid.size(); ++j) {
      const double chord = 0.5 * (fn(grid[i]) + fn(grid[j]));
      const double mid = fn(0.5 * (grid[i] + grid[j]));
      const double scale = std::max(1.0, std::abs(chord));
      w.max_violation = std::max(w.max_violation, (chord - mid) / scale);
    }
  w.ok = w.max_violation <= tol;
  w.fn = std::move(fn);
  w.grid = std::move(grid);
  return w;
}

// The scale generator matched to a peak family: the reciprocal squared symbol
// 1/|Bhat(sqrt(lambda))|^2.
inline IndexFunction from_peak(PeakModel model) {
  switch (model) {
    case PeakModel::Gaussian: return IndexFunction::exponential();
    case PeakModel::Exponential: return IndexFunction::power_plus_one(2.0);
    case PeakModel::Rational: return IndexFunction::exp_sqrt();
  }
  throw std::logic_error("from_peak: bad model");
}

}  // namespace dhs
