#pragma once

// Seeded inequality sweeps for the verify command: every margin operation
// and every check predicate runs on generated inputs, and each suite reports
// its worst (scale-normalized) margin plus a failure count. A clean run has
// zero failures and min margins above -1e-9.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dhs/index_functions.hpp"
#include "dhs/peaks_deconv.hpp"
#include "dhs/random.hpp"
#include "dhs/scales.hpp"
#include "dhs/spectral.hpp"

namespace dhs {

struct SuiteResult {
  std::string inequality;
  int trials = 0;
  double min_margin = 0.0;
  int failures = 0;
};

namespace detail {

constexpr double kMarginTol = -1e-9;

inline SpectralDensity verify_band_density(std::uint64_t seed, std::size_t n, double lo,
                                           double hi) {
  SpectralDensity d;
  d.lambdas = log_grid(lo, hi, n);
  d.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.weights[i] = uniform_at(seed, i);
  return d;
}

inline SpectralDensity verify_origin_density(std::uint64_t seed, std::size_t n, double hi) {
  SpectralDensity d;
  d.lambdas = lin_grid(0.0, hi, n);
  d.weights.resize(n);
  for (std::size_t i = 0; i < n; ++i) d.weights[i] = uniform_at(seed, i);
  return d;
}

inline Spectrum verify_bandlimited(std::uint64_t seed, std::size_t n, double dx, double x0,
                                   double band) {
  Spectrum s;
  s.coeffs.assign(n, {0.0, 0.0});
  s.dx = dx;
  s.x0 = x0;
  s.coeffs[n / 2] = {normal_at(seed, 0), 0.0};
  for (std::size_t i = n / 2 + 1; i < n; ++i) {
    if (std::abs(s.omega(i)) > band) continue;
    const std::complex<double> c(normal_at(seed, 2 * i), normal_at(seed, 2 * i + 1));
    s.coeffs[i] = c;
    s.coeffs[n - i] = std::conj(c);
  }
  return s;
}

struct SuiteAccum {
  SuiteResult r;
  explicit SuiteAccum(std::string name) {
    r.inequality = std::move(name);
    r.min_margin = std::numeric_limits<double>::infinity();
  }
  void add(double relative_margin, bool extra_ok = true) {
    ++r.trials;
    r.min_margin = std::min(r.min_margin, relative_margin);
    if (relative_margin < kMarginTol || !extra_ok) ++r.failures;
  }
};

}  // namespace detail

// trials is the per-suite count; acceptance runs use at least 100
inline std::vector<SuiteResult> run_verify_suites(std::uint64_t seed, int trials = 100) {
  if (trials < 1) throw std::invalid_argument("run_verify_suites: trials must be >= 1");
  const auto n_trials = static_cast<std::uint64_t>(trials);
  std::vector<SuiteResult> out;

  {  // generalized Hoelder with the reciprocal power pair
    detail::SuiteAccum acc("holder");
    const auto phi = IndexFunction::power_law(-1.0);
    const auto psi = IndexFunction::power_law(1.0);
    const auto theta = IndexFunction::one();
    const auto idw =
        make_concave_witness([](double x) { return x; }, log_grid(1e-8, 1e8, 48));
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      const auto d = detail::verify_band_density(seed + t, 24, 1e-2, 50.0);
      const auto rep = holder_margin(d, phi, psi, theta, idw, idw);
      acc.add(rep.margin, rep.hypotheses_ok);
    }
    out.push_back(acc.r);
  }

  {  // interpolation via concave phi o psi^{-1}, with and without theta
    detail::SuiteAccum acc("interpolation");
    const auto phi = IndexFunction::power_law(1.0);
    const auto psi = IndexFunction::power_law(3.0);
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      const auto d = detail::verify_band_density(seed + t, 28, 1e-2, 30.0);
      const auto theta =
          t % 2 == 0 ? IndexFunction::one() : IndexFunction::power_law(1.0);
      const auto rep = interp_margin(d, phi, psi, theta);
      acc.add(rep.margin / std::max(1.0, rep.scale), rep.hypotheses_ok);
    }
    out.push_back(acc.r);
  }

  {  // dilational interpolation across generators and sigma
    detail::SuiteAccum acc("dhs-interpolation");
    const IndexFunction gens[] = {IndexFunction::exponential(),
                                  IndexFunction::power_plus_one(2.0),
                                  IndexFunction::exp_sqrt()};
    const double sigmas[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      const auto d = detail::verify_origin_density(seed + t, 40, 6.0);
      const auto& a = gens[t % 3];
      const double sigma = sigmas[(t / 3) % 5];
      const auto rep = dhs_interp_margin(d, a, 1.0, sigma);
      acc.add(rep.margin / std::max(1.0, rep.scale));
    }
    out.push_back(acc.r);
  }

  {  // weighted Cauchy-Schwarz on synthetic cross densities
    detail::SuiteAccum acc("variant-cauchy-schwarz");
    const auto theta = IndexFunction::power_plus_one(2.0).dilated(0.7);
    const auto psi = IndexFunction::exponential().dilated(0.05);
    const double two_pi = 6.283185307179586;
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      const std::size_t n = 24;
      CrossDensity cd;
      cd.lambdas = log_grid(1e-3, 50.0, n);
      cd.weights_g.resize(n);
      cd.weights_r.resize(n);
      cd.cross.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        cd.weights_g[i] = uniform_at(seed + t, 4 * i);
        cd.weights_r[i] = uniform_at(seed + t, 4 * i + 1);
        const double rho = uniform_at(seed + t, 4 * i + 2);
        const double ang = two_pi * uniform_at(seed + t, 4 * i + 3);
        cd.cross[i] = rho * std::sqrt(cd.weights_g[i] * cd.weights_r[i]) *
                      std::complex<double>(std::cos(ang), std::sin(ang));
      }
      const auto rep = variant_cs_margin(cd, theta, psi);
      acc.add(rep.margin / std::max(1.0, rep.scale));
    }
    out.push_back(acc.r);
  }

  {  // multiplicative splitting of the generator, tau + rho >= 1
    detail::SuiteAccum acc("cond9");
    const IndexFunction gens[] = {IndexFunction::exponential(),
                                  IndexFunction::power_plus_one(2.0),
                                  IndexFunction::exp_sqrt()};
    const auto grid = log_grid(1e-6, 10.0, 64);
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      const double tau = 0.05 + 0.9 * uniform_at(seed + t, 0);
      const double rho_min = std::max(1.0 - tau, 0.05);
      const double rho = rho_min + (0.999 - rho_min) * uniform_at(seed + t, 1);
      const auto rep = check_cond9(gens[t % 3], tau, rho, grid);
      acc.add(rep.min_margin, rep.ok);
    }
    out.push_back(acc.r);
  }

  {  // convexity of the interpolation substitution across the dhs generators
    detail::SuiteAccum acc("convexity");
    const IndexFunction gens[] = {IndexFunction::exponential(),
                                  IndexFunction::power_plus_one(2.0),
                                  IndexFunction::exp_sqrt()};
    const auto grid = log_grid(1e-4, 8.0, 48);
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      const double sigma = 0.25 + 0.75 * uniform_at(seed + t, 2);
      const auto rep = check_convexity_psi_phi_inv(gens[t % 3], sigma, grid);
      acc.add(-rep.max_violation, rep.ok);
    }
    out.push_back(acc.r);
  }

  {  // alpha scaling relation alpha(sigma lambda) <= alpha(lambda)/sigma
    detail::SuiteAccum acc("alpha-scaling");
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      AlphaFunction alpha = AlphaFunction::constant();
      double lo = 1e-4;
      switch (t % 4) {
        case 0: break;
        case 1: alpha = AlphaFunction::powerlaw(1.5 + uniform_at(seed + t, 9)); break;
        case 2: alpha = AlphaFunction::reciprocal1p(); break;
        default:
          alpha = AlphaFunction::rational();
          lo = 0.25;  // profile is positive only from 1/4 on
          break;
      }
      std::vector<double> sigmas(8);
      for (std::size_t i = 0; i < sigmas.size(); ++i)
        sigmas[i] = 0.05 + 0.95 * uniform_at(seed + t, 20 + i);
      const auto rep = check_alpha_scaling(alpha, log_grid(lo, 100.0, 48), sigmas);
      acc.add(-rep.max_violation, rep.ok);
    }
    out.push_back(acc.r);
  }

  {  // source identity ||B_gamma f||_{gamma^2} = ||f|| on bandlimited signals
    detail::SuiteAccum acc("source-identity");
    const PeakModel models[] = {PeakModel::Gaussian, PeakModel::Exponential,
                                PeakModel::Rational};
    const double gammas[] = {0.5, 1.0, 2.0};
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      const auto f = dft_inverse(detail::verify_bandlimited(seed + t, 256, 1.0, -128.0, 2.0));
      const double dev = std::abs(source_check(f, models[t % 3], gammas[(t / 3) % 3]));
      const double fn = l2_norm(f);
      acc.add(1e-6 - dev / fn, dev <= 1e-6 * fn);
    }
    out.push_back(acc.r);
  }

  {  // broadened-residual dominance in the lambda-domain sigma convention
    detail::SuiteAccum acc("error-dominance");
    const PeakModel models[] = {PeakModel::Gaussian, PeakModel::Exponential,
                                PeakModel::Rational};
    const auto grid = lin_grid(0.0, 50.0, 256);
    for (std::uint64_t t = 0; t < n_trials; ++t) {
      const PeakModel model = models[t % 3];
      const double beta = 0.05 + 0.9 * uniform_at(seed + t, 5);
      const double sigma = sigma_of_beta(model, beta, 1.0, SigmaConvention::LambdaDomain);
      const auto rep = error_dominance_check(model, 1.0, beta, sigma, grid);
      acc.add(rep.min_margin, rep.ok);
    }
    out.push_back(acc.r);
  }

  return out;
}

inline bool verify_passed(const std::vector<SuiteResult>& suites) {
  for (const auto& s : suites)
    if (s.failures != 0 || !(s.min_margin >= detail::kMarginTol)) return false;
  return true;
}

}  // namespace dhs
