#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "lerchlab/errors.hpp"
#include "lerchlab/oracle.hpp"
#include "lerchlab/specfun.hpp"
#include "oracle_detail.hpp"

namespace lerchlab::oracle {

namespace {
constexpr double kEps = std::numeric_limits<double>::epsilon();
}

std::string_view to_string(Accel a) {
  switch (a) {
    case Accel::NONE: return "NONE";
    case Accel::ALT_CVZ: return "ALT_CVZ";
    case Accel::EM_TAIL: return "EM_TAIL";
  }
  return "?";
}

Accel parse_accel(std::string_view text) {
  std::string up(text);
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char ch) {
    return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
  });
  for (Accel a : {Accel::NONE, Accel::ALT_CVZ, Accel::EM_TAIL}) {
    if (to_string(a) == up) return a;
  }
  throw ParameterError("unknown accel \"" + std::string(text) + "\"");
}

void SumConfig::check() const {
  if (max_terms < 1000) throw ParameterError("max_terms must be >= 1000");
  if (tail_order < 1 || tail_order > 8) throw ParameterError("tail_order must be in [1, 8]");
}

HarmonicCache::HarmonicCache(HarmonicKind kind, int p, Sign b, long size) : kind_(kind), p_(p), b_(b) {
  if (p < 1) throw ParameterError("HarmonicCache needs p >= 1");
  if (size < 0) throw ParameterError("HarmonicCache needs size >= 0");
  prefix_.resize(static_cast<std::size_t>(size) + 1);
  prefix_[0] = 0.0;
  // Neumaier summation in extended precision.
  long double s = 0.0L;
  long double comp = 0.0L;
  long double sign = 1.0L;
  for (long m = 1; m <= size; ++m) {
    const long double den = kind == HarmonicKind::H ? static_cast<long double>(m) : 2.0L * m - 1.0L;
    const long double term = sign / std::pow(den, p);
    const long double t = s + term;
    comp += std::abs(s) >= std::abs(term) ? (s - t) + term : (term - t) + s;
    s = t;
    prefix_[static_cast<std::size_t>(m)] = static_cast<double>(s + comp);
    if (!b.is_plus()) sign = -sign;
  }
}

double HarmonicCache::operator[](long k) const {
  if (k < 0 || k > size()) throw ParameterError("HarmonicCache index " + std::to_string(k) + " out of range");
  return prefix_[static_cast<std::size_t>(k)];
}

namespace detail {

std::shared_ptr<const HarmonicCache> shared_cache(HarmonicKind kind, int p, Sign b, long size) {
  using Key = std::tuple<int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const HarmonicCache>> caches;
  const Key key{static_cast<int>(kind), p, b.value()};
  std::lock_guard lock(mu);
  auto& slot = caches[key];
  if (!slot || slot->size() < size) {
    const long grown = std::max(size, slot ? 2 * slot->size() : 1024L);
    slot = std::make_shared<const HarmonicCache>(kind, p, b, grown);
  }
  return slot;
}

}  // namespace detail

RealScalar gen_harmonic(HarmonicKind kind, long k, int p, Sign b) {
  if (k < 0) throw ParameterError("gen_harmonic needs k >= 0");
  const double v = (*detail::shared_cache(kind, p, b, k))[k];
  return {v, kEps * std::abs(v)};
}

RealScalar accel_alternating(const std::function<double(long)>& c, int N) {
  if (N < 1) throw ParameterError("accel_alternating needs N >= 1");
  double d = std::pow(3.0 + std::sqrt(8.0), N);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double w = -d;
  double s = 0.0;
  double mag = 0.0;
  double cmax = 0.0;
  for (int k = 0; k < N; ++k) {
    w = b - w;
    const double ck = c(k);
    s += w * ck;
    mag += std::abs(w * ck);
    cmax = std::max(cmax, std::abs(ck));
    b = static_cast<double>(k + N) * static_cast<double>(k - N) * b / ((k + 0.5) * (k + 1.0));
  }
  const double value = s / d;
  const double err = 2.0 * cmax / d + 4.0 * kEps * mag / d;
  return {value, err};
}

SmoothTerm power_log_term(double s, int e, double c) {
  if (e != 0 && e != 1) throw ParameterError("power_log_term supports ln^0 and ln^1 only");
  SmoothTerm g;
  g.deriv = [s, e, c](double x, int order) {
    double rising = 1.0;
    double harm = 0.0;
    for (int i = 0; i < order; ++i) {
      rising *= s + i;
      harm += 1.0 / (s + i);
    }
    const double sign = order % 2 == 0 ? 1.0 : -1.0;
    const double base = c * sign * rising * std::pow(x, -s - order);
    return e == 0 ? base : base * (std::log(x) - harm);
  };
  g.tail_integral = [s, e, c](double x) {
    if (s <= 1.0) return std::numeric_limits<double>::infinity();
    const double head = c * std::pow(x, 1.0 - s) / (s - 1.0);
    return e == 0 ? head : head * (std::log(x) + 1.0 / (s - 1.0));
  };
  return g;
}

RealScalar em_tail(const SmoothTerm& g, long N, int order) {
  if (N < 1) throw ParameterError("em_tail needs N >= 1");
  if (order < 1 || 2 * order + 2 > 2 * specfun::kMaxBernoulliM) throw ParameterError("em_tail order out of range");
  const double x = static_cast<double>(N);
  const double integral = g.tail_integral(x);
  if (!std::isfinite(integral)) throw DivergenceError("em_tail: tail integral diverges");
  const double g0 = g.deriv(x, 0);
  double value = integral - 0.5 * g0;
  double scale = std::abs(integral) + std::abs(g0);
  double fact = 1.0;  // (2j)!
  double last = 0.0;
  for (int j = 1; j <= order + 1; ++j) {
    fact *= (2.0 * j - 1.0) * (2.0 * j);
    const double t = specfun::bernoulli(2 * j) / fact * g.deriv(x, 2 * j - 1);
    if (j <= order) {
      value -= t;
      scale += std::abs(t);
    } else {
      last = t;
    }
  }
  return {value, std::abs(last) + 4.0 * kEps * scale};
}

RealScalar boole_tail(const SmoothTerm& g, long N, int order) {
  if (N < 0) throw ParameterError("boole_tail needs N >= 0");
  if (order < 1 || 2 * order + 3 > 2 * specfun::kMaxBernoulliM) throw ParameterError("boole_tail order out of range");
  const double x = static_cast<double>(N + 1);
  // E_j(0) = -2 (2^{j+1} - 1) B_{j+1} / (j + 1) for j >= 1.
  auto euler0 = [](int j) {
    if (j == 0) return 1.0;
    return -2.0 * (std::ldexp(1.0, j + 1) - 1.0) * specfun::bernoulli(j + 1) / (j + 1);
  };
  const int top = 2 * order + 1;
  double value = 0.0;
  double scale = 0.0;
  double fact = 1.0;
  double last = 0.0;
  for (int j = 0; j <= top + 2; ++j) {
    if (j > 0) fact *= j;
    const double e = euler0(j);
    if (e == 0.0) continue;
    const double t = 0.5 * e / fact * g.deriv(x, j);
    if (j <= top) {
      value += t;
      scale += std::abs(t);
    } else {
      last = t;
    }
  }
  const double sign = (N + 1) % 2 == 0 ? 1.0 : -1.0;
  return {sign * value, std::abs(last) + 4.0 * kEps * scale};
}

}  // namespace lerchlab::oracle
