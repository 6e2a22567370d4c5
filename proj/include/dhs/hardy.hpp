#pragma once

// Differentiation of analytic periodic functions, coefficient-space model.
// g(z) = sum_{k>=1} b_k z^k restricted to the unit circle; the ambient norm
// is sum |b_k|^2 and the radius-R norm sum R^{2k} |b_k|^2 encodes that g has
// no singularity inside |z| < R. Differentiation multiplies mode k by k, and
// the noise-vs-truncation balance gives two error bounds: a log-scale one
// from the exponential weight and a power-scale one, with the former winning
// asymptotically as the noise level drops.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dhs/random.hpp"

namespace dhs {

struct HardyFunction {
  // coeffs[k-1] holds b_k, k = 1..K; the constant term is zero by convention
  std::vector<std::complex<double>> coeffs;

  std::size_t K() const { return coeffs.size(); }
};

inline void validate(const HardyFunction& g) {
  if (g.coeffs.empty()) throw std::invalid_argument("hardy: need at least one coefficient");
  for (const auto& c : g.coeffs)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("hardy: coefficients must be finite");
}

// sqrt(sum R^{2k} |b_k|^2); R = 1 is the ambient norm. Saturates to +inf
// when the weighted sum overflows (g is then outside the radius-R space);
// zero coefficients are skipped so an overflowed weight cannot turn an empty
// mode into 0 * inf.
inline double hardy_norm(const HardyFunction& g, double R) {
  validate(g);
  if (!(R >= 1.0)) throw std::domain_error("hardy_norm: R must be >= 1");
  const double R2 = R * R;
  double weight = 1.0;
  double acc = 0.0;
  for (const auto& c : g.coeffs) {
    weight *= R2;
    const double mag = std::norm(c);
    if (mag == 0.0) continue;
    acc += weight * mag;
    if (std::isinf(acc)) return std::numeric_limits<double>::infinity();
  }
  return std::sqrt(acc);
}

// ambient norm of a derivative-like coefficient sequence c_0..c_{K-1}
inline double seq_norm(const std::vector<std::complex<double>>& c) {
  double acc = 0.0;
  for (const auto& v : c) acc += std::norm(v);
  return std::sqrt(acc);
}

// d/dz: coefficient of z^{k-1} is k b_k. The result is a plain coefficient
// sequence (its constant term b_1 is generally nonzero).
inline std::vector<std::complex<double>> differentiate(const HardyFunction& g) {
  validate(g);
  std::vector<std::complex<double>> d(g.K());
  for (std::size_t k = 1; k <= g.K(); ++k)
    d[k - 1] = static_cast<double>(k) * g.coeffs[k - 1];
  return d;
}

struct DiffBounds {
  double vhs = 0.0;  // 2 eps |log(C/eps)| / log R
  double ohs = 0.0;  // 2 C^{1/m} eps^{1-1/m}
};

inline DiffBounds diff_bounds(double C, double eps, double R, double m) {
  if (!(C > 0.0)) throw std::domain_error("diff_bounds: C must be > 0");
  if (!(eps > 0.0)) throw std::domain_error("diff_bounds: eps must be > 0");
  if (!(eps < C)) throw std::domain_error("diff_bounds: need eps < C");
  if (!(R > 1.0)) throw std::domain_error("diff_bounds: R must be > 1");
  if (!(m > 1.0)) throw std::domain_error("diff_bounds: m must be > 1");
  DiffBounds b;
  b.vhs = 2.0 * eps * std::abs(std::log(C / eps)) / std::log(R);
  b.ohs = 2.0 * std::pow(C, 1.0 / m) * std::pow(eps, 1.0 - 1.0 / m);
  return b;
}

struct DiffReport {
  double empirical_error = 0.0;
  double vhs_bound = 0.0;
  double ohs_bound = 0.0;
  double C = 0.0;           // certified radius-R norm of the truth
  std::size_t k_star = 0;   // highest mode kept by the cutoff
};

// Seeded differentiation experiment: perturb the coefficients with complex
// white noise of ambient norm exactly eps, estimate the derivative by keeping
// modes k <= k* = floor(log(C/eps)/log R) (the balance point of the log-scale
// bound), and measure the ambient error against the exact derivative. The
// power-scale comparison bound uses exponent m.
inline DiffReport diff_experiment(const HardyFunction& g, double R, double eps,
                                  std::uint64_t seed, double m = 2.0) {
  validate(g);
  if (!(R > 1.0)) throw std::domain_error("diff_experiment: R must be > 1");
  if (!(eps >= 0.0)) throw std::domain_error("diff_experiment: eps must be >= 0");
  const double C = hardy_norm(g, R);
  if (!std::isfinite(C))
    throw std::domain_error("diff_experiment: radius-R norm of the truth must be finite");

  const std::size_t K = g.K();
  DiffReport rep;
  rep.C = C;
  if (eps == 0.0) {
    rep.k_star = K;  // nothing to balance: keep every mode, recover exactly
    return rep;
  }

  const DiffBounds b = diff_bounds(C, eps, R, m);
  rep.vhs_bound = b.vhs;
  rep.ohs_bound = b.ohs;
  const double level = std::floor(std::log(C / eps) / std::log(R));
  rep.k_star = level <= 0.0 ? 0 : std::min(K, static_cast<std::size_t>(level));

  std::vector<double> xi = gaussian_vector(seed, 2 * K);
  std::vector<std::complex<double>> eta(K);
  double nn = 0.0;
  for (std::size_t j = 0; j < K; ++j) {
    eta[j] = {xi[2 * j], xi[2 * j + 1]};
    nn += std::norm(eta[j]);
  }
  const double scale = eps / std::sqrt(nn);

  // estimate - truth: amplified noise on the kept modes, lost signal beyond
  double err_sq = 0.0;
  for (std::size_t k = 1; k <= K; ++k) {
    const double kk = static_cast<double>(k);
    err_sq += kk * kk *
              (k <= rep.k_star ? std::norm(scale * eta[k - 1]) : std::norm(g.coeffs[k - 1]));
  }
  rep.empirical_error = std::sqrt(err_sq);
  return rep;
}

// canonical truth with unit radius-R norm: b_k = R^{-k} / sqrt(K)
inline HardyFunction unit_hardy_truth(std::size_t K, double R) {
  if (K == 0) throw std::invalid_argument("unit_hardy_truth: K must be >= 1");
  if (!(R > 1.0)) throw std::domain_error("unit_hardy_truth: R must be > 1");
  HardyFunction g;
  g.coeffs.resize(K);
  const double amp = 1.0 / std::sqrt(static_cast<double>(K));
  double rk = 1.0;
  for (std::size_t k = 0; k < K; ++k) {
    rk /= R;
    g.coeffs[k] = {amp * rk, 0.0};
  }
  return g;
}

}  // namespace dhs
