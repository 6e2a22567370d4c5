#pragma once

// The three peak families, normalised to unit area so Bhat(0) = 1:
//
//   Gaussian     B(t) = exp(-t^2/2)/sqrt(2 pi)   Bhat(w) = exp(-w^2/2)
//   Exponential  B(t) = exp(-|t|)/2              Bhat(w) = 1/(1+w^2)
//   Rational     B(t) = 1/(pi (1+t^2))           Bhat(w) = exp(-|w|)
//
// Broadening by width gamma dilates the symbol: Bhat_gamma(w) = Bhat(gamma w).
// The sharpening kernel divides two symbols of the same family,
// khat(w) = Bhat(gamma w)/Bhat(beta w), which stays bounded only for
// beta < gamma.

#include <cmath>
#include <stdexcept>
#include <string>

namespace dhs {

enum class PeakModel { Gaussian, Exponential, Rational };

inline const char* to_string(PeakModel m) {
  switch (m) {
    case PeakModel::Gaussian: return "gaussian";
    case PeakModel::Exponential: return "exponential";
    case PeakModel::Rational: return "rational";
  }
  return "?";
}

inline PeakModel parse_peak_model(const std::string& s) {
  if (s == "gaussian") return PeakModel::Gaussian;
  if (s == "exponential") return PeakModel::Exponential;
  if (s == "rational") return PeakModel::Rational;
  throw std::invalid_argument("unknown peak model \"" + s +
                              "\" (expected gaussian, exponential or rational)");
}

// Unit-area peak shape B(t).
inline double peak_value(PeakModel m, double t) {
  switch (m) {
    case PeakModel::Gaussian: return std::exp(-0.5 * t * t) / std::sqrt(2.0 * 3.14159265358979323846);
    case PeakModel::Exponential: return 0.5 * std::exp(-std::abs(t));
    case PeakModel::Rational: return 1.0 / (3.14159265358979323846 * (1.0 + t * t));
  }
  return 0.0;
}

inline double log_peak_hat(PeakModel m, double gamma, double w) {
  const double u = gamma * w;
  switch (m) {
    case PeakModel::Gaussian: return -0.5 * u * u;
    case PeakModel::Exponential: return -std::log1p(u * u);
    case PeakModel::Rational: return -std::abs(u);
  }
  return 0.0;
}

// Bhat(gamma w), in (0, 1].
inline double peak_hat(PeakModel m, double gamma, double w) {
  if (!(gamma > 0.0)) throw std::domain_error("peak_hat: gamma must be > 0");
  return std::exp(log_peak_hat(m, gamma, w));
}

inline double log_factored_kernel_hat(PeakModel m, double gamma, double beta, double w) {
  switch (m) {
    case PeakModel::Gaussian: return -0.5 * (gamma * gamma - beta * beta) * w * w;
    case PeakModel::Exponential:
      return std::log1p(beta * beta * w * w) - std::log1p(gamma * gamma * w * w);
    case PeakModel::Rational: return -(gamma - beta) * std::abs(w);
  }
  return 0.0;
}

// khat(w) = Bhat(gamma w)/Bhat(beta w), the symbol of the residual broadening
// factor B_gamma = k * B_beta. Bounded by 1 on all of R when beta < gamma.
inline double factored_kernel_hat(PeakModel m, double gamma, double beta, double w) {
  if (!(gamma > 0.0) || !(beta > 0.0))
    throw std::domain_error("factored_kernel_hat: widths must be > 0");
  if (!(beta < gamma))
    throw std::domain_error("factored_kernel_hat: requires beta < gamma (unbounded symbol otherwise)");
  return std::exp(log_factored_kernel_hat(m, gamma, beta, w));
}

}  // namespace dhs
