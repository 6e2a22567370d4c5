#pragma once

// Uniformly sampled real signal on the window [x0, x0 + n*dx).
// Sample counts are even and >= 2 so the spectral layout always has a single
// DC bin, paired +/- frequency bins, and a single Nyquist bin.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dhs {

struct GridSignal {
  std::vector<double> samples;
  double dx = 1.0;
  double x0 = 0.0;

  std::size_t size() const { return samples.size(); }
  double x(std::size_t j) const { return x0 + static_cast<double>(j) * dx; }
  double length() const { return static_cast<double>(samples.size()) * dx; }
};

inline void validate(const GridSignal& f) {
  const std::size_t n = f.samples.size();
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("GridSignal: sample count must be even and >= 2, got " +
                                std::to_string(n));
  if (!std::isfinite(f.dx) || !(f.dx > 0.0))
    throw std::invalid_argument("GridSignal: dx must be finite and > 0");
  if (!std::isfinite(f.x0))
    throw std::invalid_argument("GridSignal: x0 must be finite");
  for (std::size_t j = 0; j < n; ++j)
    if (!std::isfinite(f.samples[j]))
      throw std::invalid_argument("GridSignal: non-finite sample at index " + std::to_string(j));
}

inline GridSignal make_signal(std::vector<double> samples, double dx, double x0) {
  GridSignal f{std::move(samples), dx, x0};
  validate(f);
  return f;
}

// Rectangle-rule L2 norm on the window: sqrt(sum f_j^2 dx).
inline double l2_norm(const GridSignal& f) {
  double s = 0.0;
  for (double v : f.samples) s += v * v;
  return std::sqrt(s * f.dx);
}

}  // namespace dhs
