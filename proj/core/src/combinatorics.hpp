#pragma once

#include <complex>
#include <cstdint>

namespace pqc::detail {

// Exact for every result that fits in 64 bits (n <= 62 is always safe).
inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// z^n by repeated multiplication; z^0 == 1 even for z == 0.
inline std::complex<double> ipow(std::complex<double> z, int n) {
  std::complex<double> r{1.0, 0.0};
  for (int i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace pqc::detail
