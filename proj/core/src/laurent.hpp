#pragma once

// A value that may carry a simple pole at an order-1 Lerch argument.
//
// Phi(1, 1+e, alpha) = 1/e - psi(alpha) + O(e). Terms of a closed form that
// individually sit on this pole are carried as {finite, residue}; valid
// parameter sets cancel every residue, leaving the finite part.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lerchlab/specfun.hpp"
#include "lerchlab/types.hpp"

namespace lerchlab::closedform::detail {

struct Lv {
  double fin = 0.0;
  double pole = 0.0;
  double err = 0.0;

  Lv() = default;
  Lv(double f, double p = 0.0, double e = 0.0) : fin(f), pole(p), err(e) {}
  explicit Lv(const RealScalar& r) : fin(r.value), err(r.err) {}

  Lv& operator+=(const Lv& o) {
    fin += o.fin;
    pole += o.pole;
    err += o.err;
    return *this;
  }
  friend Lv operator+(Lv x, const Lv& y) { return x += y; }
  friend Lv operator-(Lv x, const Lv& y) {
    x.fin -= y.fin;
    x.pole -= y.pole;
    x.err += y.err;
    return x;
  }
  friend Lv operator*(double s, const Lv& x) { return {s * x.fin, s * x.pole, std::abs(s) * x.err}; }
  friend Lv operator*(const Lv& x, const Lv& y) {
    if (x.pole != 0.0 && y.pole != 0.0) throw std::logic_error("product of two pole terms");
    return {x.fin * y.fin, x.pole * y.fin + x.fin * y.pole,
            std::abs(x.fin) * y.err + std::abs(y.fin) * x.err + x.err * y.err};
  }
};

// Phi(c, q, alpha) with the pole convention at (c, q) = (+1, 1).
inline Lv phi(Sign c, int q, const Rational& alpha) {
  if (c.is_plus() && q == 1) {
    const auto psi = specfun::digamma(alpha);
    return {-psi.value, 1.0, psi.err};
  }
  return Lv(specfun::lerch_phi(c, q, alpha));
}

inline Lv phi1(Sign c, int q) { return phi(c, q, Rational(1)); }

inline Lv theta(Sign c, int q, int s, int r) { return Lv(specfun::theta(c, q, s, r)); }

inline Lv zeta(int s) { return phi1(Sign::plus(), s); }
inline Lv eta(int s) { return phi1(Sign::minus(), s); }
inline Lv lambda(int s) { return std::ldexp(1.0, -s) * phi(Sign::plus(), s, Rational(1, 2)); }
inline Lv beta(int s) { return std::ldexp(1.0, -s) * phi(Sign::minus(), s, Rational(1, 2)); }

// Running sum that also tracks the magnitude of what went in.
struct Acc {
  Lv sum;
  double scale = 0.0;

  void add(const Lv& t) {
    sum += t;
    scale += std::abs(t.fin);
  }
};

// Collapses to a RealScalar; a surviving residue means the formula was
// evaluated outside its domain.
inline RealScalar finish(const Lv& v, double scale) {
  const double tol = 1e-9 * std::max(1.0, scale);
  if (std::abs(v.pole) > tol) throw std::logic_error("closed form left an uncancelled pole");
  const double eps = std::numeric_limits<double>::epsilon();
  return {v.fin, v.err + 16.0 * eps * std::max(std::abs(v.fin), scale)};
}

}  // namespace lerchlab::closedform::detail
