#pragma once

// Unnormalised complex FFT: forward computes X_k = sum_j x_j e^{-2pi i jk/n}.
// Power-of-two lengths use iterative Cooley-Tukey with a precomputed root
// table; other lengths fall back to Bluestein's chirp-z, so any n works.
// The inverse includes the 1/n factor.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace dhs::detail {

using cxd = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void fft_pow2(std::vector<cxd>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // One table of n-th roots; stage `len` strides through it by n/len.
  std::vector<cxd> roots(n / 2);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = sign * 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    roots[k] = cxd(std::cos(ang), std::sin(ang));
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const cxd w = roots[j * stride];
        const cxd u = a[i + j];
        const cxd v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

// Chirp-z via jk = (j^2 + k^2 - (k-j)^2)/2: with c_j = e^{sign pi i j^2/n},
// X_k = c_k * (a ** b)_k where a_j = x_j c_j and b_j = conj(c_j). j^2 is
// reduced mod 2n in integers to keep the phase argument small and accurate
// for large n.
inline void fft_bluestein(std::vector<cxd>& x, bool inverse) {
  const std::size_t n = x.size();
  std::vector<cxd> chirp(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t j2 = (static_cast<std::uint64_t>(j) * j) % (2 * n);
    const double ang = sign * kPi * static_cast<double>(j2) / static_cast<double>(n);
    chirp[j] = cxd(std::cos(ang), std::sin(ang));
  }

  std::size_t m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cxd> a(m, cxd(0.0)), b(m, cxd(0.0));
  for (std::size_t j = 0; j < n; ++j) a[j] = x[j] * chirp[j];
  b[0] = std::conj(chirp[0]);
  for (std::size_t j = 1; j < n; ++j) b[j] = b[m - j] = std::conj(chirp[j]);

  fft_pow2(a, false);
  fft_pow2(b, false);
  for (std::size_t j = 0; j < m; ++j) a[j] *= b[j];
  fft_pow2(a, true);
  const double scale = 1.0 / static_cast<double>(m);
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * scale * chirp[k];
}

inline void fft(std::vector<cxd>& a) {
  if (is_pow2(a.size()))
    fft_pow2(a, false);
  else
    fft_bluestein(a, false);
}

inline void ifft(std::vector<cxd>& a) {
  if (is_pow2(a.size()))
    fft_pow2(a, true);
  else
    fft_bluestein(a, true);
  const double scale = 1.0 / static_cast<double>(a.size());
  for (auto& v : a) v *= scale;
}

}  // namespace dhs::detail
