#pragma once

#include <cmath>
#include <cstdint>

namespace lerchlab::specfun::detail {

inline constexpr int kZetaTableSize = 64;

// zeta(s) at integer s != 1, including the negative integers.
double zeta_int(int s);

// eta(s) at any integer s.
double eta_int(int s);

}  // namespace lerchlab::specfun::detail

namespace lerchlab::detail {

inline std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline double neg_one_pow(long long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

inline double ipow(double x, int e) {
  if (e < 0) return 1.0 / ipow(x, -e);
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

// ln(x) given x and xc = 1 - x, keeping accuracy near x = 1.
inline double log_pair(double x, double xc) { return x < 0.5 ? std::log(x) : std::log1p(-xc); }

}  // namespace lerchlab::detail
