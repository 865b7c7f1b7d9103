#include <cmath>
#include <string>

#include "lerchlab/errors.hpp"
#include "lerchlab/oracle.hpp"
#include "lerchlab/specfun.hpp"
#include "numeric_detail.hpp"

namespace lerchlab::oracle {

using closedform::Family;
using closedform::FamilyTag;
using closedform::Params;
using closedform::Variant;
using lerchlab::detail::factorial;
using lerchlab::detail::ipow;
using lerchlab::detail::log_pair;
using lerchlab::detail::neg_one_pow;

namespace {

// ln(t/t0)/(t - t0) with dist = t - t0; log1p only near t0, where it is exact.
double log_ratio(double L, double L0, double t0, double dist) {
  if (dist == 0.0) return 1.0 / t0;
  if (std::abs(dist) < 0.5 * t0) return std::log1p(dist / t0) / dist;
  return (L - L0) / dist;
}

// Li_p(b e^mu), mu < 0.
double li(int p, Sign b, double mu) { return specfun::polylog_exp(p, b, mu).value; }

// Re Li_p(b e^{-mu}), mu < 0.
double li_recip(int p, Sign b, double mu) { return specfun::polylog_re_recip_exp(p, b, mu).value; }

QuadConfig halved(const QuadConfig& cfg) {
  QuadConfig c = cfg;
  c.abs_tol = std::max(1e-14, 0.5 * cfg.abs_tol);
  return c;
}

RealScalar add(const RealScalar& x, const RealScalar& y) { return {x.value + y.value, x.err + y.err}; }

void require_valid(const Family& family, const Params& params) {
  const auto v = closedform::validate_params(family, params);
  if (!v.ok) throw closedform::ValidationError(v);
}

RealScalar unit_family(const Family& family, const Params& x, const QuadConfig& cfg) {
  if (family.tag != FamilyTag::INT_UNIT_1 && family.tag != FamilyTag::INT_UNIT_2) {
    throw ParameterError("quad_unit handles INT_UNIT_1 and INT_UNIT_2 only");
  }
  require_valid(family, x);
  const bool squared = family.tag == FamilyTag::INT_UNIT_2;
  const bool recip = family.variant == Variant::ii;
  const double m = squared ? 2.0 * x.n : x.n;
  const bool a_plus = x.a.is_plus();
  auto f = [&](double t, double, double tc) {
    const double L = log_pair(t, tc);
    const double poly = recip ? li_recip(x.p, x.b, m * L) : li(x.p, x.b, m * L);
    double den;
    if (squared) {
      den = a_plus ? tc * (1.0 + t) : 1.0 + t * t;
    } else {
      den = a_plus ? tc : 1.0 + t;
    }
    return ipow(L, x.q - 1) * poly / den;
  };
  return tanh_sinh(f, 0.0, 1.0, cfg);
}

RealScalar lemma3(const Lemma3Integral& d, const QuadConfig& cfg) {
  if (d.q < 1 || d.s < 1 || d.r < 1) throw ParameterError("Lemma3Integral needs q, s, r >= 1");
  if (d.c.is_plus() && d.q == 1) throw DivergenceError("Lemma3Integral: c = 1, q = 1 diverges");
  auto f = [&](double t, double, double tc) {
    const double L = log_pair(t, tc);
    const double den = d.c.is_plus() ? -std::expm1(d.r * L) : 1.0 + std::exp(d.r * L);
    return std::exp((d.s - 1) * L) * ipow(L, d.q - 1) / den;
  };
  return tanh_sinh(f, 0.0, 1.0, cfg);
}

// Both legs of a half-line integral: x in (0,1) and x = 1/t with t in (0,1).
RealScalar halfline_family(const Family& family, const Params& x, bool reflected, const QuadConfig& cfg) {
  if (family.tag != FamilyTag::INT_INF_1 && family.tag != FamilyTag::INT_INF_2) {
    throw ParameterError("quad_halfline handles INT_INF_1 and INT_INF_2 only");
  }
  require_valid(family, x);
  const bool squared = family.tag == FamilyTag::INT_INF_2;
  const double m = squared ? 2.0 * x.n : x.n;
  const bool a_plus = x.a.is_plus();
  const double flip = neg_one_pow(x.q - 1);

  // ln^{q-1}(x) Li(b x^{+-m}) / (x (1 - a x))  or  / (1 - a x^2)
  auto near = [&](double t, double, double tc) {
    const double L = log_pair(t, tc);
    const double poly = reflected ? li_recip(x.p, x.b, m * L) : li(x.p, x.b, m * L);
    double den;
    if (squared) {
      den = a_plus ? tc * (1.0 + t) : 1.0 + t * t;
    } else {
      den = a_plus ? tc : 1.0 + t;
      if (!reflected) den *= t;
    }
    return ipow(L, x.q - 1) * poly / den;
  };
  // After x = 1/t: (-1)^{q-1} ln^{q-1}(t) Li(b t^{-+m}) / (t - a)  (or / (t (t - a)), / (t^2 - a))
  auto far = [&](double t, double, double tc) {
    const double L = log_pair(t, tc);
    const double poly = reflected ? li(x.p, x.b, m * L) : li_recip(x.p, x.b, m * L);
    double den;
    if (squared) {
      den = a_plus ? -tc * (1.0 + t) : t * t + 1.0;
    } else {
      den = a_plus ? -tc : t + 1.0;
      if (reflected) den *= t;
    }
    return flip * ipow(L, x.q - 1) * poly / den;
  };
  const QuadConfig half = halved(cfg);
  return add(tanh_sinh(near, 0.0, 1.0, half), tanh_sinh(far, 0.0, 1.0, half));
}

RealScalar lemma5(const Lemma5Integral& d, const QuadConfig& cfg) {
  if (d.q < 1 || d.n < 1) throw ParameterError("Lemma5Integral needs q, n >= 1");
  if (!(d.y > 0.0 && d.y < 1.0)) throw DomainError("Lemma5Integral needs y in (0, 1)");
  if (d.a.is_plus() && d.q == 1) {
    throw closedform::ValidationError(closedform::Validity{false, closedform::Reason::Q1_A1_DIVERGENT});
  }
  const int q = d.q;
  const int n = d.n;
  const double sa = d.a.as_double();
  const double by = d.b.as_double() * d.y;
  const double flip = neg_one_pow(q - 1);
  const QuadConfig half = halved(cfg);

  // x in (0,1): the two fractions combined so the 1/x cancels exactly.
  auto near = [&](double t, double, double tc) {
    const double L = log_pair(t, tc);
    const double one_minus_at = d.a.is_plus() ? tc : 1.0 + t;
    const double tn = std::exp(n * L);
    return ipow(L, q - 1) * (sa - by * tn / t) / (one_minus_at * (1.0 - by * tn));
  };
  const RealScalar first = tanh_sinh(near, 0.0, 1.0, half);

  auto a_part = [&](double L, double tc, double t) {
    const double t_minus_a = d.a.is_plus() ? -tc : t + 1.0;
    return flip * ipow(L, q - 1) / t_minus_a;
  };

  if (!d.b.is_plus()) {
    auto far = [&](double t, double, double tc) {
      const double L = log_pair(t, tc);
      const double tn1 = std::exp((n - 1) * L);
      return a_part(L, tc, t) - flip * ipow(L, q - 1) * tn1 / (tn1 * t + d.y);
    };
    return add(first, tanh_sinh(far, 0.0, 1.0, half));
  }

  // b = 1: simple pole at t0 = y^{1/n}. The subtracted piece
  // (-1)^{q-1} ln^{q-1}(t0) t^{n-1} / (t^n - y) has the same residue and
  // PV int_0^1 t^{n-1}/(t^n - y) dt = (ln(1 - y) - ln y)/n.
  const double t0 = std::pow(d.y, 1.0 / n);
  const double L0 = std::log(d.y) / n;
  auto smooth = [&](double t, double tc, double dist) {
    const double L = log_pair(t, tc);
    const double ratio = log_ratio(L, L0, t0, dist);  // ln(t/t0)/(t - t0)
    double lsum = 0.0;  // (L^{q-1} - L0^{q-1})/(L - L0)
    for (int i = 0; i <= q - 2; ++i) lsum += ipow(L, i) * ipow(L0, q - 2 - i);
    double psum = 0.0;  // (t^n - y)/(t - t0)
    for (int k = 0; k < n; ++k) psum += ipow(t, k) * ipow(t0, n - 1 - k);
    const double g = flip * ipow(t, n - 1) * ratio * lsum / psum;
    return a_part(L, tc, t) - g;
  };
  auto left = [&](double t, double, double dhi) { return smooth(t, (1.0 - t0) + dhi, -dhi); };
  auto right = [&](double t, double dlo, double dhi) { return smooth(t, dhi, dlo); };
  QuadConfig quarter = halved(half);
  const RealScalar l = tanh_sinh(left, 0.0, t0, quarter);
  const RealScalar r = tanh_sinh(right, t0, 1.0, quarter);
  const double pv = -flip * ipow(L0, q - 1) * (std::log1p(-d.y) - std::log(d.y)) / n;
  RealScalar out = add(first, add(l, r));
  out.value += pv;
  return out;
}

}  // namespace

RealScalar quad_unit(const UnitIntegral& what, const QuadConfig& cfg) {
  if (const auto* fam = std::get_if<FamilyIntegral>(&what)) return unit_family(fam->family, fam->params, cfg);
  return lemma3(std::get<Lemma3Integral>(what), cfg);
}

RealScalar quad_halfline(const HalfLineIntegral& what, const QuadConfig& cfg) {
  if (const auto* fam = std::get_if<FamilyIntegral>(&what)) {
    return halfline_family(fam->family, fam->params, false, cfg);
  }
  if (const auto* ref = std::get_if<ReflectedIntegral>(&what)) {
    return halfline_family(Family(ref->base), ref->params, true, cfg);
  }
  return lemma5(std::get<Lemma5Integral>(what), cfg);
}

RealScalar pv_polylog_re(int p, double y, const QuadConfig& cfg) {
  if (p < 1) throw ParameterError("pv_polylog_re needs p >= 1");
  if (!(y > 1.0)) throw DomainError("pv_polylog_re needs y > 1");
  const double t0 = 1.0 / y;
  const double L0 = -std::log(y);
  // (f(t) - f(t0)) / (1 - y t) with f = y ln^{p-1}(t), written without cancellation.
  auto smooth = [&](double t, double tc, double dist) {
    if (p == 1) return 0.0;
    const double L = log_pair(t, tc);
    const double ratio = log_ratio(L, L0, t0, dist);
    double lsum = 0.0;
    for (int i = 0; i <= p - 2; ++i) lsum += ipow(L, i) * ipow(L0, p - 2 - i);
    return -ratio * lsum;
  };
  auto left = [&](double t, double, double dhi) { return smooth(t, (1.0 - t0) + dhi, -dhi); };
  auto right = [&](double t, double dlo, double dhi) { return smooth(t, dhi, dlo); };
  const QuadConfig half = halved(cfg);
  const RealScalar l = tanh_sinh(left, 0.0, t0, half);
  const RealScalar r = tanh_sinh(right, t0, 1.0, half);
  // f(t0) PV int_0^1 dt/(1 - y t) = y ln^{p-1}(t0) (-ln(y - 1)/y)
  const double pv = -ipow(L0, p - 1) * std::log(y - 1.0);
  const double pre = neg_one_pow(p - 1) / static_cast<double>(factorial(p - 1));
  return {pre * (l.value + r.value + pv), std::abs(pre) * (l.err + r.err)};
}

}  // namespace lerchlab::oracle
