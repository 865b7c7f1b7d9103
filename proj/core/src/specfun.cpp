#include <array>
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

// n + alpha rounded once.
double shifted(std::int64_t n, const Rational& alpha) {
  return static_cast<double>(n * alpha.den() + alpha.num()) / static_cast<double>(alpha.den());
}

// B_{2j} / (2j)!
double bernoulli_over_factorial(int j) {
  static const auto table = [] {
    std::array<double, 20> t{};
    double fact = 1.0;
    for (int i = 1; i < 20; ++i) {
      fact *= (2.0 * i - 1.0) * (2.0 * i);
      t[static_cast<std::size_t>(i)] = bernoulli(2 * i) / fact;
    }
    return t;
  }();
  return table[static_cast<std::size_t>(j)];
}

}  // namespace

RealScalar hurwitz_zeta(int q, const Rational& alpha) {
  if (q < 2) throw DomainError("hurwitz_zeta: q must be >= 2 (divergent), got " + std::to_string(q));
  if (!alpha.positive()) throw DomainError("hurwitz_zeta: alpha must be positive, got " + alpha.str());

  constexpr int kHead = 20;
  constexpr int kOrder = 8;

  double head = 0.0;
  for (int n = kHead - 1; n >= 0; --n) head += std::pow(shifted(n, alpha), -q);

  const double x = shifted(kHead, alpha);
  const double inv_x2 = 1.0 / (x * x);
  double tail = std::pow(x, 1 - q) / (q - 1) + 0.5 * std::pow(x, -q);
  double rising = q;  // q (q+1) ... (q+2j-2)
  double xp = std::pow(x, -q - 1);
  double abs_tail = std::abs(tail);
  for (int j = 1; j <= kOrder; ++j) {
    const double term = bernoulli_over_factorial(j) * rising * xp;
    tail += term;
    abs_tail += std::abs(term);
    rising *= (q + 2.0 * j - 1.0) * (q + 2.0 * j);
    xp *= inv_x2;
  }
  const double next = std::abs(bernoulli_over_factorial(kOrder + 1) * rising * xp);
  const double value = head + tail;
  return {value, next + 4.0 * kEps * (head + abs_tail)};
}

RealScalar digamma(const Rational& alpha) {
  if (!alpha.positive()) throw DomainError("digamma: alpha must be positive, got " + alpha.str());

  constexpr double kShiftTo = 16.0;
  double recurrence = 0.0;
  std::int64_t n = 0;
  double y = shifted(0, alpha);
  while (y < kShiftTo) {
    recurrence += 1.0 / y;
    ++n;
    y = shifted(n, alpha);
  }
  const double inv_y2 = 1.0 / (y * y);
  double series = 0.0;
  double yp = inv_y2;
  double abs_series = 0.0;
  for (int k = 1; k <= 9; ++k) {
    const double term = bernoulli(2 * k) / (2.0 * k) * yp;
    series += term;
    abs_series += std::abs(term);
    yp *= inv_y2;
  }
  const double log_y = std::log(y);
  const double value = log_y - 0.5 / y - series - recurrence;
  const double next = std::abs(bernoulli(20) / 20.0 * yp);
  return {value, next + 4.0 * kEps * (log_y + abs_series + recurrence)};
}

RealScalar lerch_phi(const LerchPoint& pt) { return lerch_phi(pt.c, pt.q, pt.alpha); }

RealScalar lerch_phi(Sign c, int q, const Rational& alpha) {
  if (q < 0) throw DomainError("lerch_phi: q must be >= 0");
  if (!alpha.positive() || Rational(1) < alpha) {
    throw DomainError("lerch_phi: alpha must lie in (0, 1], got " + alpha.str());
  }
  if (q == 0) {
    if (!alpha.is_one()) throw DomainError("lerch_phi: q = 0 is defined only at alpha = 1");
    return {c.is_plus() ? -0.5 : 0.5, 0.0};
  }
  if (c.is_plus()) {
    if (q == 1) throw DivergenceError("lerch_phi: Phi(1, 1, alpha) diverges");
    return hurwitz_zeta(q, alpha);
  }
  if (q == 1) {
    const auto hi = digamma((alpha + Rational(1)) / Rational(2));
    const auto lo = digamma(alpha / Rational(2));
    const double value = 0.5 * (hi.value - lo.value);
    return {value, 0.5 * (hi.err + lo.err) + 2.0 * kEps * std::abs(value)};
  }
  const auto half = hurwitz_zeta(q, alpha / Rational(2));
  const auto whole = hurwitz_zeta(q, alpha);
  const double scale = std::ldexp(1.0, 1 - q);
  const double value = scale * half.value - whole.value;
  return {value, scale * half.err + whole.err + 2.0 * kEps * std::abs(value)};
}

RealScalar reduced_constant(Constant kind, int s) {
  const std::string name = [&] {
    switch (kind) {
      case Constant::zeta: return "zeta";
      case Constant::eta: return "eta";
      case Constant::lambda: return "lambda";
      case Constant::beta: return "beta";
    }
    return "?";
  }();
  auto diverge = [&] {
    return DivergenceError("reduced_constant: " + name + "(" + std::to_string(s) + ") is not defined");
  };
  switch (kind) {
    case Constant::zeta:
      if (s == 0) return {-0.5, 0.0};
      if (s < 2) throw diverge();
      return lerch_phi(Sign::plus(), s, Rational(1));
    case Constant::eta:
      if (s < 0) throw diverge();
      return lerch_phi(Sign::minus(), s, Rational(1));
    case Constant::lambda: {
      if (s < 2) throw diverge();
      const auto v = lerch_phi(Sign::plus(), s, Rational(1, 2));
      return {std::ldexp(v.value, -s), std::ldexp(v.err, -s)};
    }
    case Constant::beta: {
      if (s < 1) throw diverge();
      const auto v = lerch_phi(Sign::minus(), s, Rational(1, 2));
      return {std::ldexp(v.value, -s), std::ldexp(v.err, -s)};
    }
  }
  throw diverge();
}

RealScalar theta(Sign c, int q, int s, int r) {
  if (q < 1) throw DomainError("theta: q must be >= 1");
  if (s <= 0 || r <= 0 || s >= r) {
    throw DomainError("theta: s/r must lie in (0, 1), got " + std::to_string(s) + "/" + std::to_string(r));
  }
  const Rational lo(s, r);
  if (c.is_plus() && q == 1) {
    const double x = std::numbers::pi * lo.to_double();
    const double value = std::numbers::pi * std::cos(x) / std::sin(x);
    return {value, 4.0 * kEps * (std::abs(value) + std::numbers::pi)};
  }
  const auto first = lerch_phi(c, q, lo);
  const auto second = lerch_phi(c, q, Rational(r - s, r));
  const double sign = (c * parity(q)).as_double();
  const double value = first.value + sign * second.value;
  return {value, first.err + second.err + 2.0 * kEps * std::abs(value)};
}

namespace detail {

double zeta_int(int s) {
  static const auto table = [] {
    std::array<double, kZetaTableSize> t{};
    t[0] = -0.5;
    t[1] = std::numeric_limits<double>::infinity();
    for (int k = 2; k < kZetaTableSize; ++k) {
      t[static_cast<std::size_t>(k)] = hurwitz_zeta(k, Rational(1)).value;
    }
    return t;
  }();
  if (s >= kZetaTableSize) return 1.0 + std::exp2(-s);
  if (s >= 0) return table[static_cast<std::size_t>(s)];
  // zeta(-m) = -B_{m+1} / (m+1)
  const int m = -s;
  return -bernoulli(m + 1) / (m + 1);
}

double eta_int(int s) {
  if (s == 0) return 0.5;
  if (s == 1) return std::numbers::ln2;
  return -std::expm1((1 - s) * std::numbers::ln2) * zeta_int(s);
}

}  // namespace detail

}  // namespace lerchlab::specfun
