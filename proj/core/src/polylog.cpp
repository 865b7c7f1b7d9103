#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "lerchlab/errors.hpp"
#include "lerchlab/specfun.hpp"
#include "numeric_detail.hpp"

namespace lerchlab::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Beyond |mu| = 1 the plain power series needs at most ~40 terms.
constexpr double kSeriesSwitch = 1.0;

// sum_{k>=1} x^k / k^p for |x| <= e^{-1}.
RealScalar direct_series(int p, double x) {
  double sum = 0.0;
  double abs_sum = 0.0;
  double xk = x;
  for (int k = 1; k < 2000; ++k) {
    const double term = xk / lerchlab::detail::ipow(k, p);
    sum += term;
    abs_sum += std::abs(term);
    if (std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
    xk *= x;
  }
  return {sum, 4.0 * kEps * abs_sum};
}

// Li_p(e^mu) for p >= 2, -1 <= mu <= 0:
//   sum_{k != p-1} zeta(p-k) mu^k / k! + mu^{p-1}/(p-1)! (H_{p-1} - ln(-mu)).
// zeta(-2m) = eta(-2m) = 0, so a zero term is no stopping signal.
RealScalar log_series_plus(int p, double mu) {
  if (mu == 0.0) return {detail::zeta_int(p), 4.0 * kEps * detail::zeta_int(p)};
  double harmonic = 0.0;
  for (int i = 1; i < p; ++i) harmonic += 1.0 / i;
  double sum = 0.0;
  double abs_sum = 0.0;
  double mk = 1.0;  // mu^k / k!
  for (int k = 0; k < 60; ++k) {
    double term;
    if (k == p - 1) {
      term = mk * (harmonic - std::log(-mu));
    } else {
      term = detail::zeta_int(p - k) * mk;
    }
    sum += term;
    abs_sum += std::abs(term);
    if (k > p && term != 0.0 && std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
    mk *= mu / (k + 1);
  }
  return {sum, 4.0 * kEps * abs_sum};
}

// Li_p(-e^mu) = -sum_k eta(p-k) mu^k / k!, valid for |mu| < pi.
RealScalar log_series_minus(int p, double mu) {
  double sum = 0.0;
  double abs_sum = 0.0;
  double mk = 1.0;
  for (int k = 0; k < 60; ++k) {
    const double term = -detail::eta_int(p - k) * mk;
    sum += term;
    abs_sum += std::abs(term);
    if (k > p && term != 0.0 && std::abs(term) <= 0.25 * kEps * std::abs(sum)) break;
    mk *= mu / (k + 1);
  }
  return {sum, 4.0 * kEps * abs_sum};
}

}  // namespace

RealScalar polylog_exp(int p, Sign c, double mu) {
  if (p < 1) throw DomainError("polylog: p must be >= 1");
  if (!(mu <= 0.0)) throw DomainError("polylog_exp: mu must be <= 0");
  if (p == 1) {
    if (c.is_plus()) {
      if (mu == 0.0) throw DivergenceError("polylog: Li_1(1) diverges");
      const double v = mu < -std::numbers::ln2 ? -std::log1p(-std::exp(mu)) : -std::log(-std::expm1(mu));
      return {v, 2.0 * kEps * (std::abs(v) + 1.0)};
    }
    const double v = -std::log1p(std::exp(mu));
    return {v, 2.0 * kEps * std::abs(v)};
  }
  if (mu < -kSeriesSwitch) return direct_series(p, c.as_double() * std::exp(mu));
  return c.is_plus() ? log_series_plus(p, mu) : log_series_minus(p, mu);
}

RealScalar polylog(int p, double x) {
  if (p < 1) throw DomainError("polylog: p must be >= 1");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("polylog: x must lie in [-1, 1]");
  if (x == 0.0) return {0.0, 0.0};
  const Sign c = x > 0 ? Sign::plus() : Sign::minus();
  if (p == 1 && x == 1.0) throw DivergenceError("polylog: Li_1(1) diverges");
  if (p == 1) {
    const double v = -std::log1p(-x);
    return {v, 2.0 * kEps * std::abs(v)};
  }
  return polylog_exp(p, c, std::log(std::abs(x)));
}

RealScalar polylog_re_recip_exp(int p, Sign c, double mu) {
  if (p < 1) throw DomainError("polylog: p must be >= 1");
  if (!(mu < 0.0)) throw DomainError("polylog_re_recip: need |argument| > 1");
  // 2c sum_{k=0}^{p/2} mu^{p-2k}/(p-2k)! Phi(c, 2k, 1)
  double poly = 0.0;
  double abs_poly = 0.0;
  double fact = 1.0;  // (p-2k)!
  for (int i = 2; i <= p; ++i) fact *= i;
  for (int k = 0; 2 * k <= p; ++k) {
    const int m = p - 2 * k;
    const double phi = c.is_plus() ? detail::zeta_int(2 * k) : detail::eta_int(2 * k);
    const double term = lerchlab::detail::ipow(mu, m) / fact * phi;
    poly += term;
    abs_poly += std::abs(term);
    if (m >= 2) fact /= static_cast<double>(m) * (m - 1);
  }
  poly *= 2.0 * c.as_double();
  abs_poly *= 2.0;
  const auto inner = polylog_exp(p, c, mu);
  const double value = lerchlab::detail::neg_one_pow(p) * (poly - inner.value);
  return {value, inner.err + 4.0 * kEps * (abs_poly + std::abs(inner.value))};
}

RealScalar polylog_re_recip(int p, Sign c, double x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("polylog_re_recip: x must lie in (0, 1), got " + std::to_string(x));
  }
  return polylog_re_recip_exp(p, c, std::log(x));
}

}  // namespace lerchlab::specfun
