#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "wavechain/errors.hpp"

namespace wavechain::dsp {

inline size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 FFT. Size must be a power of two.
inline void fft(std::vector<std::complex<double>>& a, bool inverse = false) {
  const size_t n = a.size();
  if (n == 0 || (n & (n - 1)) != 0) throw Error("fft size must be a power of two");
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    for (auto& x : a) x /= static_cast<double>(n);
  }
}

// Magnitude-squared spectrum of a real signal, zero-padded to nfft.
// Returns bins 0..nfft/2 (inclusive); bin k maps to k*sr/nfft Hz.
template <class T>
std::vector<double> power_spectrum_raw(const T* x, size_t n, size_t nfft) {
  std::vector<std::complex<double>> a(nfft, {0.0, 0.0});
  for (size_t i = 0; i < n && i < nfft; ++i) a[i] = {static_cast<double>(x[i]), 0.0};
  fft(a);
  std::vector<double> p(nfft / 2 + 1);
  for (size_t k = 0; k < p.size(); ++k) p[k] = std::norm(a[k]);
  return p;
}

inline std::vector<double> hann_window(size_t n) {
  std::vector<double> w(n);
  if (n == 1) {
    w[0] = 1.0;
    return w;
  }
  for (size_t i = 0; i < n; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * static_cast<double>(i) / static_cast<double>(n - 1));
  return w;
}

}  // namespace wavechain::dsp
