#pragma once

// Counter-mode SplitMix64. value_at(seed, i) is a pure function of (seed, i),
// so any draw can be reproduced without replaying the stream and two runs
// with the same seed agree bit for bit across platforms.

#include <cstdint>
#include <cmath>
#include <cstddef>
#include <vector>

namespace dhs {

inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Uniform on (0, 1]; never 0, so log() below is safe.
inline double uniform_at(std::uint64_t seed, std::uint64_t i) {
  return static_cast<double>((splitmix64_at(seed, i) >> 11) + 1) * 0x1.0p-53;
}

// Standard normal via Box-Muller on counters (2i, 2i+1).
inline double normal_at(std::uint64_t seed, std::uint64_t i) {
  const double u1 = uniform_at(seed, 2 * i);
  const double u2 = uniform_at(seed, 2 * i + 1);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return r * std::cos(2.0 * 3.14159265358979323846 * u2);
}

inline std::vector<double> gaussian_vector(std::uint64_t seed, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = normal_at(seed, i);
  return v;
}

}  // namespace dhs
