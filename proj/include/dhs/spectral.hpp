#pragma once

// Discrete stand-ins for the continuous Fourier transform and for the
// spectral measure of a signal with respect to T = -d^2/dx^2.
//
//   forward:  fhat(w_k) = dx * sum_j f_j e^{-i w_k x_j},   w_k = 2pi k/(n dx)
//   inverse:  f_j = (1/(n dx)) * sum_k fhat(w_k) e^{+i w_k x_j}
//   measure:  lambda = w^2 carries weight (1/2pi)(|fhat(w)|^2 + |fhat(-w)|^2) dw
//
// The rectangle-rule scaling makes the discrete Parseval identity exact in
// exact arithmetic: the weights of the spectral measure sum to ||f||^2.
// Coefficients are stored for k = -n/2 .. n/2-1 in increasing k order; the
// lone Nyquist bin (k = -n/2) enters the measure once.

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "dhs/fft.hpp"
#include "dhs/grid_signal.hpp"

namespace dhs {

struct Spectrum {
  std::vector<std::complex<double>> coeffs;  // index i holds k = i - n/2
  double dx = 1.0;
  double x0 = 0.0;

  std::size_t size() const { return coeffs.size(); }

  double omega(std::size_t i) const {
    const double n = static_cast<double>(coeffs.size());
    const double k = static_cast<double>(i) - n / 2.0;
    return 2.0 * detail::kPi * k / (n * dx);
  }

  double domega() const {
    return 2.0 * detail::kPi / (static_cast<double>(coeffs.size()) * dx);
  }
};

inline Spectrum dft_forward(const GridSignal& f) {
  validate(f);
  const std::size_t n = f.size();
  std::vector<detail::cxd> a(n);
  for (std::size_t j = 0; j < n; ++j) a[j] = detail::cxd(f.samples[j], 0.0);
  detail::fft(a);

  Spectrum s;
  s.dx = f.dx;
  s.x0 = f.x0;
  s.coeffs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    // k = i - n/2, folded into natural DFT order mod n
    const std::size_t kk = (i + n / 2) % n;
    const double w = 2.0 * detail::kPi *
                     (static_cast<double>(i) - static_cast<double>(n) / 2.0) /
                     (static_cast<double>(n) * f.dx);
    const detail::cxd phase(std::cos(w * f.x0), -std::sin(w * f.x0));
    s.coeffs[i] = f.dx * phase * a[kk];
  }
  return s;
}

inline GridSignal dft_inverse(const Spectrum& s) {
  const std::size_t n = s.size();
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("dft_inverse: coefficient count must be even and >= 2");
  if (!(s.dx > 0.0)) throw std::invalid_argument("dft_inverse: dx must be > 0");

  std::vector<detail::cxd> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t kk = (i + n / 2) % n;
    const double w = s.omega(i);
    const detail::cxd phase(std::cos(w * s.x0), std::sin(w * s.x0));
    a[kk] = s.coeffs[i] * phase;
  }
  detail::ifft(a);

  GridSignal f;
  f.dx = s.dx;
  f.x0 = s.x0;
  f.samples.resize(n);
  for (std::size_t j = 0; j < n; ++j) f.samples[j] = a[j].real() / s.dx;
  return f;
}

// ||f|| computed on the Fourier side; equals l2_norm(dft_inverse(s)) for
// Hermitian spectra by Parseval.
inline double spectrum_l2_norm(const Spectrum& s) {
  double acc = 0.0;
  for (const auto& c : s.coeffs) acc += std::norm(c);
  return std::sqrt(acc * s.domega() / (2.0 * detail::kPi));
}

// Spectral measure of T = -d^2/dx^2: bins at lambda = w_m^2, m = 0..n/2,
// strictly ascending. +/-w pairs are merged; DC and Nyquist enter once.
struct SpectralDensity {
  std::vector<double> lambdas;
  std::vector<double> weights;

  std::size_t size() const { return lambdas.size(); }
};

inline SpectralDensity spectral_density(const Spectrum& s) {
  const std::size_t n = s.size();
  const std::size_t half = n / 2;
  const double c = s.domega() / (2.0 * detail::kPi);  // = 1/(n dx)

  SpectralDensity d;
  d.lambdas.resize(half + 1);
  d.weights.resize(half + 1);

  // storage index of k: i = k + n/2
  d.lambdas[0] = 0.0;
  d.weights[0] = c * std::norm(s.coeffs[half]);
  for (std::size_t m = 1; m < half; ++m) {
    const double w = s.omega(half + m);
    d.lambdas[m] = w * w;
    d.weights[m] = c * (std::norm(s.coeffs[half + m]) + std::norm(s.coeffs[half - m]));
  }
  const double wnyq = s.omega(0);
  d.lambdas[half] = wnyq * wnyq;
  d.weights[half] = c * std::norm(s.coeffs[0]);
  return d;
}

inline SpectralDensity spectral_density(const GridSignal& f) {
  return spectral_density(dft_forward(f));
}

// Joint measure of a pair (g, r): diagonal weights plus the complex cross
// terms g_hat conj(r_hat), paired over +/-w like the scalar measure. The
// pointwise bound |cross| <= sqrt(w_g w_r) survives the pairing.
struct CrossDensity {
  std::vector<double> lambdas;
  std::vector<double> weights_g;
  std::vector<double> weights_r;
  std::vector<std::complex<double>> cross;

  std::size_t size() const { return lambdas.size(); }
};

inline CrossDensity cross_density(const Spectrum& g, const Spectrum& r) {
  const std::size_t n = g.size();
  if (r.size() != n || r.dx != g.dx || r.x0 != g.x0)
    throw std::invalid_argument("cross_density: spectra must share one grid");
  const std::size_t half = n / 2;
  const double c = g.domega() / (2.0 * detail::kPi);

  CrossDensity d;
  d.lambdas.resize(half + 1);
  d.weights_g.resize(half + 1);
  d.weights_r.resize(half + 1);
  d.cross.resize(half + 1);

  auto put = [&](std::size_t bin, double lambda, std::initializer_list<std::size_t> idx) {
    double wg = 0.0, wr = 0.0;
    std::complex<double> cr(0.0);
    for (std::size_t i : idx) {
      wg += std::norm(g.coeffs[i]);
      wr += std::norm(r.coeffs[i]);
      cr += g.coeffs[i] * std::conj(r.coeffs[i]);
    }
    d.lambdas[bin] = lambda;
    d.weights_g[bin] = c * wg;
    d.weights_r[bin] = c * wr;
    d.cross[bin] = c * cr;
  };

  put(0, 0.0, {half});
  for (std::size_t m = 1; m < half; ++m) {
    const double w = g.omega(half + m);
    put(m, w * w, {half + m, half - m});
  }
  const double wnyq = g.omega(0);
  put(half, wnyq * wnyq, {0});
  return d;
}

}  // namespace dhs
