#pragma once

// Weighted spectral norms ||f||_phi^2 = sum phi(lambda_k) w_k and the
// interpolation inequalities evaluated as signed margins (nonnegative margin
// means the inequality holds). Hypotheses of the conditional theorems are
// certified numerically and reported as flags; a margin is never asserted
// silently on unverified hypotheses.
//
// Overflow policy: exp-type weights on wide-band densities can exceed double
// range; norms saturate to +infinity, which is meaningful (f lies outside
// that space). Zero-weight bins are skipped so an infinite weight on an
// empty bin cannot poison the sum with 0 * inf.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "dhs/index_functions.hpp"
#include "dhs/spectral.hpp"

namespace dhs {

template <class Phi>
double vhs_norm_sq(const SpectralDensity& d, const Phi& phi) {
  double acc = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.weights[i] == 0.0) continue;
    acc += phi(d.lambdas[i]) * d.weights[i];
    if (std::isinf(acc)) return std::numeric_limits<double>::infinity();
  }
  return acc;
}

template <class Phi>
double vhs_norm(const SpectralDensity& d, const Phi& phi) {
  return std::sqrt(vhs_norm_sq(d, phi));
}

inline double dhs_norm_sq(const SpectralDensity& d, const IndexFunction& a, double s) {
  if (!a.dhs_admissible()) throw std::domain_error("dhs_norm: generator must satisfy a(0) = 1");
  if (!(s >= 0.0)) throw std::domain_error("dhs_norm: s must be >= 0");
  return vhs_norm_sq(d, [&](double l) { return a(s * l); });
}

// ||f||_s with phi(lambda) = a(s lambda); s = 0 gives the ambient norm.
inline double dhs_norm(const SpectralDensity& d, const IndexFunction& a, double s) {
  return std::sqrt(dhs_norm_sq(d, a, s));
}

namespace detail {

inline double nonzero_total(const SpectralDensity& d, const char* who) {
  double tot = 0.0;
  for (double w : d.weights) tot += w;
  if (!(tot > 0.0)) throw std::domain_error(std::string(who) + ": zero spectral density");
  return tot;
}

}  // namespace detail

struct HolderReport {
  double margin = 0.0;            // Phi(.)Psi(.) - 1, guaranteed >= 0 by the theorem
  double condition_margin = 0.0;  // min over support of Phi(phi)Psi(psi) - 1
  bool hypotheses_ok = false;     // both witnesses concave and condition holds
};

// Generalized Hoelder: 1 <= Phi(||f||_{phi theta}^2/||f||_theta^2) *
// Psi(||f||_{psi theta}^2/||f||_theta^2), provided 1 <= Phi(phi)Psi(psi)
// pointwise and Phi, Psi are concave.
inline HolderReport holder_margin(const SpectralDensity& d, const IndexFunction& phi,
                                  const IndexFunction& psi, const IndexFunction& theta,
                                  const ConcaveWitness& Phi, const ConcaveWitness& Psi) {
  detail::nonzero_total(d, "holder_margin");
  const double t2 = vhs_norm_sq(d, theta);
  if (!(t2 > 0.0) || std::isinf(t2))
    throw std::domain_error("holder_margin: ||f||_theta^2 must be finite and positive");
  const double pt2 = vhs_norm_sq(d, [&](double l) { return phi(l) * theta(l); });
  const double qt2 = vhs_norm_sq(d, [&](double l) { return psi(l) * theta(l); });

  HolderReport rep;
  rep.margin = Phi.fn(pt2 / t2) * Psi.fn(qt2 / t2) - 1.0;

  double cond = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.weights[i] == 0.0) continue;
    cond = std::min(cond, Phi.fn(phi(d.lambdas[i])) * Psi.fn(psi(d.lambdas[i])) - 1.0);
  }
  rep.condition_margin = cond;
  rep.hypotheses_ok = Phi.ok && Psi.ok && cond >= -1e-12;
  return rep;
}

struct InterpReport {
  double margin = 0.0;  // RHS - LHS of the interpolation inequality
  double scale = 0.0;   // the RHS, for relative comparisons
  double certificate_violation = 0.0;
  bool hypotheses_ok = false;  // phi o psi^{-1} concave on the support
};

// ||f||_{phi theta}^2 <= ||f||_theta^2 (phi o psi^{-1})(||f||_{psi theta}^2 /
// ||f||_theta^2) when phi o psi^{-1} is concave. theta = one() gives the
// plain two-norm case.
inline InterpReport interp_margin(const SpectralDensity& d, const IndexFunction& phi,
                                  const IndexFunction& psi, const IndexFunction& theta) {
  detail::nonzero_total(d, "interp_margin");
  const double t2 = vhs_norm_sq(d, theta);
  if (!(t2 > 0.0) || std::isinf(t2))
    throw std::domain_error("interp_margin: ||f||_theta^2 must be finite and positive");
  const double pt2 = vhs_norm_sq(d, [&](double l) { return phi(l) * theta(l); });
  const double qt2 = vhs_norm_sq(d, [&](double l) { return psi(l) * theta(l); });

  // concavity certificate for phi o psi^{-1} on the psi-image of the support
  std::vector<double> ygrid;
  ygrid.reserve(d.size() + 1);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d.weights[i] == 0.0) continue;
    const double y = psi(d.lambdas[i]);
    if (std::isfinite(y)) ygrid.push_back(y);
  }
  ygrid.push_back(qt2 / t2);
  auto w = make_concave_witness([&](double y) { return phi(psi.inverse(y)); }, ygrid, 1e-10);

  InterpReport rep;
  rep.scale = t2 * phi(psi.inverse(qt2 / t2));
  rep.margin = rep.scale - pt2;
  rep.certificate_violation = w.max_violation;
  rep.hypotheses_ok = w.ok;
  return rep;
}

struct DhsInterpReport {
  double margin = 0.0;  // RHS - ||f||_{sigma t}^2
  double scale = 0.0;   // ||f||_t^2, for relative comparisons
  bool closed_form = false;
};

// ||f||_{sigma t}^2 <= ||f||^2 a(sigma a^{-1}(||f||_t^2/||f||^2)) for
// generators whose profile passes the scaling relation; exact at sigma = 0,
// sigma = 1 and on point masses.
inline DhsInterpReport dhs_interp_margin(const SpectralDensity& d, const IndexFunction& a,
                                         double t, double sigma) {
  if (!(sigma >= 0.0) || sigma > 1.0)
    throw std::domain_error("dhs_interp_margin: sigma must lie in [0,1]");
  if (!(t > 0.0)) throw std::domain_error("dhs_interp_margin: t must be > 0");
  detail::nonzero_total(d, "dhs_interp_margin");

  const double base = vhs_norm_sq(d, [](double) { return 1.0; });
  const double full = dhs_norm_sq(d, a, t);
  if (std::isinf(full))
    throw std::overflow_error("dhs_interp_margin: ||f||_t overflows (f outside H_t)");

  DhsInterpReport rep;
  rep.scale = full;
  rep.closed_form = a.kind() == IndexFunction::Kind::Exp ||
                    a.kind() == IndexFunction::Kind::PowerPlusOne ||
                    a.kind() == IndexFunction::Kind::ExpSqrt;
  const double lhs = dhs_norm_sq(d, a, sigma * t);
  rep.margin = base * a(sigma * a.inverse(full / base)) - lhs;
  return rep;
}

struct CsReport {
  double margin = 0.0;  // ||g||_psi ||r||_{theta^2/psi} - Re (g,r)_theta
  double scale = 0.0;   // the norm product
};

// Weighted Cauchy-Schwarz: (g,r)_theta <= ||g||_psi ||r||_{theta^2/psi},
// unconditional for positive psi.
inline CsReport variant_cs_margin(const CrossDensity& cd, const IndexFunction& theta,
                                  const IndexFunction& psi) {
  double g2 = 0.0, r2 = 0.0, inner = 0.0;
  for (std::size_t i = 0; i < cd.size(); ++i) {
    const double l = cd.lambdas[i];
    if (cd.weights_g[i] != 0.0) g2 += psi(l) * cd.weights_g[i];
    if (cd.weights_r[i] != 0.0) {
      const double p = psi(l);
      if (!(p > 0.0)) throw std::domain_error("variant_cs_margin: psi vanishes on the support");
      r2 += theta(l) * theta(l) / p * cd.weights_r[i];
    }
    if (cd.cross[i] != std::complex<double>(0.0, 0.0)) inner += theta(l) * cd.cross[i].real();
  }
  CsReport rep;
  rep.scale = std::sqrt(g2) * std::sqrt(r2);
  rep.margin = rep.scale - inner;
  return rep;
}

}  // namespace dhs
