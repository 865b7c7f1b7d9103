#include <cmath>
#include <limits>

#include "lerchlab/closedform.hpp"
#include "lerchlab/errors.hpp"
#include "lerchlab/specfun.hpp"
#include "numeric_detail.hpp"

namespace lerchlab::closedform {

using lerchlab::detail::factorial;
using lerchlab::detail::ipow;
using lerchlab::detail::neg_one_pow;

namespace {

// Phi(c, q, alpha) for any rational alpha > 0, stepping down into (0, 1].
RealScalar phi_any(Sign c, int q, const Rational& alpha) {
  Rational base = alpha;
  int steps = 0;
  while (Rational(1) < base) {
    base = base - Rational(1);
    ++steps;
  }
  RealScalar v = specfun::lerch_phi(c, q, base);
  const double sc = c.as_double();
  for (int k = 0; k < steps; ++k) {
    const double head = ipow((base + Rational(k)).to_double(), -q);
    v.value = sc * (v.value - head);
    v.err += 2.0 * std::numeric_limits<double>::epsilon() * head;
  }
  return v;
}

}  // namespace

RealScalar lemma3_value(Sign c, int q, int s, int r) {
  if (q < 1 || s < 1 || r < 1) throw ParameterError("lemma3_value needs q, s, r >= 1");
  if (c.is_plus() && q == 1) throw DivergenceError("lemma3_value: (c, q) = (1, 1) diverges");
  const double coef = neg_one_pow(q - 1) * static_cast<double>(factorial(q - 1)) * ipow(r, -q);
  const RealScalar phi = phi_any(c, q, Rational(s, r));
  return {coef * phi.value, std::abs(coef) * phi.err};
}

RealScalar lemma5_value(int q, int n, Sign a, Sign b, double y) {
  if (q < 1 || n < 1) throw ParameterError("lemma5_value needs q, n >= 1");
  if (a.is_plus() && q == 1) throw ValidationError(Validity{false, Reason::Q1_A1_DIVERGENT});
  if (!(y > 0.0 && y < 1.0)) throw DomainError("lemma5_value needs y in (0, 1)");

  const double fq = static_cast<double>(factorial(q - 1));
  double value = 0.0;
  double err = 0.0;
  if (q % 2 == 0) {
    const RealScalar pa = specfun::lerch_phi(a, q, Rational(1));
    value -= a.as_double() * 2.0 * fq * pa.value;
    err += 2.0 * fq * pa.err;
  }
  const double ly = std::log(y);
  const double pre = 2.0 * b.as_double() * neg_one_pow(q) * fq * ipow(n, -q);
  double scale = std::abs(value);
  for (int j = 0; 2 * j <= q; ++j) {
    const RealScalar pb = specfun::lerch_phi(b, 2 * j, Rational(1));
    const double c = pre * ipow(ly, q - 2 * j) / static_cast<double>(factorial(q - 2 * j));
    value += c * pb.value;
    err += std::abs(c) * pb.err;
    scale += std::abs(c * pb.value);
  }
  err += 8.0 * std::numeric_limits<double>::epsilon() * scale;
  return {value, err};
}

}  // namespace lerchlab::closedform
