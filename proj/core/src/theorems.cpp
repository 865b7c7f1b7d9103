#include "lerchlab/closedform.hpp"
#include "lerchlab/errors.hpp"
#include "laurent.hpp"
#include "numeric_detail.hpp"

namespace lerchlab::closedform {

namespace {

using detail::Acc;
using detail::Lv;
using detail::phi;
using detail::phi1;
using detail::theta;
using lerchlab::detail::binomial;
using lerchlab::detail::factorial;
using lerchlab::detail::ipow;
using lerchlab::detail::neg_one_pow;

const Rational kHalf(1, 2);

struct Ctx {
  int p, q, n;
  Sign a, b;
  double sa, sb;
  double fq;  // (q-1)!

  explicit Ctx(const Params& x)
      : p(x.p), q(x.q), n(x.n), a(x.a), b(x.b), sa(x.a.as_double()), sb(x.b.as_double()),
        fq(static_cast<double>(factorial(x.q - 1))) {}

  double ap(int e) const { return a.pow(e).as_double(); }
  double bp(int e) const { return b.pow(e).as_double(); }
  double sgn(int e) const { return neg_one_pow(e); }
};

// sum_{j=2}^{n} sum_{k=1}^{K} C(p+q-k-1, m-1) w^j (-1)^k Theta(c,k,j-1,n) Phi(d,p+q-k,(n-j+1)/n)
Lv sum_theta_n(int p, int q, int n, int K, int m, Sign w, Sign c, Sign d) {
  Lv s;
  for (int j = 2; j <= n; ++j) {
    for (int k = 1; k <= K; ++k) {
      const double coef = static_cast<double>(binomial(p + q - k - 1, m - 1)) * w.pow(j).as_double() *
                          neg_one_pow(k);
      s += coef * (theta(c, k, j - 1, n) * phi(d, p + q - k, Rational(n - j + 1, n)));
    }
  }
  return s;
}

// The same with Theta(c,k,2j-1,2n) and alpha = (2n-2j+1)/(2n), j = 1..n.
Lv sum_theta_2n(int p, int q, int n, int K, int m, Sign w, Sign c, Sign d) {
  Lv s;
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= K; ++k) {
      const double coef = static_cast<double>(binomial(p + q - k - 1, m - 1)) * w.pow(j).as_double() *
                          neg_one_pow(k);
      s += coef * (theta(c, k, 2 * j - 1, 2 * n) * phi(d, p + q - k, Rational(2 * n - 2 * j + 1, 2 * n)));
    }
  }
  return s;
}

// sum_{j=0}^{J/2} C(p+q-2j-1, m-1) r^{-2j} Phi(c,2j,1) Phi(d,p+q-2j,alpha)
Lv sum_even(int p, int q, int J, int m, double r, Sign c, Sign d, const Rational& alpha) {
  Lv s;
  for (int j = 0; 2 * j <= J; ++j) {
    const double coef = static_cast<double>(binomial(p + q - 2 * j - 1, m - 1)) * ipow(r, -2 * j);
    s += coef * (phi1(c, 2 * j) * phi(d, p + q - 2 * j, alpha));
  }
  return s;
}

Acc int_inf_1(const Ctx& x) {
  const Sign c = x.a.pow(x.n) * x.b;
  Acc acc;
  acc.add(-x.ap(x.n - 1) * x.sb * (1 + x.sgn(x.q)) * x.fq * (phi1(c, x.p) * phi1(x.a, x.q)));
  acc.add(2 * x.ap(x.n) * ipow(x.n, -x.q) * x.fq *
          sum_even(x.p, x.q, x.q, x.p, 1.0, x.b, c, Rational(1)));
  acc.add(x.ap(x.n - 1) * x.sb * ipow(x.n, -x.q) * x.fq *
          sum_theta_n(x.p, x.q, x.n, x.q, x.p, x.a, x.b, c));
  return acc;
}

Acc int_inf_2(const Ctx& x) {
  const Sign c = x.a.pow(x.n) * x.b;
  Acc acc;
  acc.add(-x.ap(x.n - 1) * x.sb * ipow(2, -x.q) * x.fq * (1 + x.sa * x.sgn(x.q)) *
          (phi(x.a, x.q, kHalf) * phi1(c, x.p)));
  acc.add(x.ap(x.n - 1) * x.sb * ipow(2 * x.n, -x.q) * x.fq *
          sum_theta_2n(x.p, x.q, x.n, x.q, x.p, x.a, x.b, c));
  return acc;
}

Acc int_unit_1(const Ctx& x, bool part_ii) {
  const Sign c = x.a.pow(x.n) * x.b;
  const double nn = part_ii ? -x.n : x.n;
  Acc acc;
  acc.add(0.5 * x.sa * x.sb * (part_ii ? 1.0 : x.sgn(x.q)) * x.fq * ipow(x.n, -x.q) *
          phi1(x.b, x.p + x.q));
  acc.add(-0.5 * x.ap(x.n) * x.sb * (1 + x.sgn(x.q)) * x.fq * (phi1(x.a, x.q) * phi1(c, x.p)));
  acc.add(x.ap(x.n - 1) * ipow(nn, -x.q) * x.fq * sum_even(x.p, x.q, x.q, x.p, 1.0, x.b, c, Rational(1)));
  acc.add(x.sb * ipow(nn, x.p) * x.fq * sum_even(x.p, x.q, x.p, x.q, x.n, x.b, x.a, Rational(1)));
  acc.add(0.5 * x.ap(x.n) * x.sb * ipow(nn, -x.q) * x.fq *
          sum_theta_n(x.p, x.q, x.n, x.q, x.p, x.a, x.b, c));
  return acc;
}

Acc int_unit_2(const Ctx& x, bool part_ii) {
  const Sign c = x.a.pow(x.n) * x.b;
  Acc acc;
  const Lv head = phi(x.a, x.q, kHalf) * phi1(c, x.p);
  const Lv mid = sum_even(x.p, x.q, x.p, x.q, x.n, x.b, x.a, kHalf);
  const Lv tail = sum_theta_2n(x.p, x.q, x.n, x.q, x.p, x.a, x.b, c);
  const double odd_p = 1 - x.sgn(x.p);
  if (!part_ii) {
    acc.add(-0.5 * x.ap(x.n - 1) * x.sb * ipow(2, -x.q) * x.fq * odd_p * head);
    acc.add(x.sa * x.sb * ipow(2, -x.q) * ipow(x.n, x.p) * x.fq * mid);
    acc.add(0.5 * x.ap(x.n - 1) * x.sb * ipow(2 * x.n, -x.q) * x.fq * tail);
  } else {
    acc.add(-0.5 * x.ap(x.n) * x.sb * ipow(-2, -x.q) * x.fq * odd_p * head);
    acc.add(-x.sb * ipow(-2, -x.q) * ipow(x.n, x.p) * x.fq * mid);
    acc.add(0.5 * x.ap(x.n) * x.sb * ipow(-2 * x.n, -x.q) * x.fq * tail);
  }
  return acc;
}

Acc euler_h(const Ctx& x) {
  const Sign c = x.a * x.b.pow(x.n);
  Acc acc;
  acc.add(0.5 * x.sa * x.bp(x.n - 1) * ipow(x.n, -x.p) * phi1(c, x.p + x.q));
  acc.add(0.5 * x.sa * (1 - x.sgn(x.p)) * (phi1(x.a, x.q) * phi1(x.b, x.p)));
  acc.add(-x.sa * x.bp(x.n) * ipow(-x.n, x.q) * sum_even(x.p, x.q, x.q, x.p, x.n, c, x.b, Rational(1)));
  acc.add(x.bp(x.n - 1) * ipow(-x.n, -x.p) * sum_even(x.p, x.q, x.p, x.q, 1.0, c, x.a, Rational(1)));
  acc.add(0.5 * x.sa * ipow(-x.n, -x.p) * sum_theta_n(x.p, x.q, x.n, x.p, x.q, x.b, c, x.a));
  return acc;
}

Acc euler_o(const Ctx& x) {
  const Sign c = x.a * x.b.pow(x.n);
  Acc acc;
  acc.add(0.5 * x.sa * (1 + x.sgn(x.q)) * ipow(2, -x.p) * (phi1(x.a, x.q) * phi(x.b, x.p, kHalf)));
  acc.add(x.sa * x.bp(x.n - 1) * ipow(x.n, x.q) * ipow(-2, -x.p) *
          sum_even(x.p, x.q, x.q, x.p, x.n, c, x.b, kHalf));
  acc.add(0.5 * x.sa * x.sb * ipow(-2 * x.n, -x.p) * sum_theta_2n(x.p, x.q, x.n, x.p, x.q, x.b, c, x.a));
  return acc;
}

Acc bbp_h(const Ctx& x) {
  const Sign c = x.a.pow(x.n) * x.b;
  Acc acc;
  acc.add(-0.5 * x.ap(x.n - 1) * ipow(x.n, -x.q) * phi1(c, x.p + x.q));
  acc.add(0.5 * (1 + x.sgn(x.q)) * (phi1(x.a, x.q) * phi1(x.b, x.p)));
  acc.add(-x.ap(x.n - 1) * x.sb * ipow(-x.n, -x.q) * sum_even(x.p, x.q, x.q, x.p, 1.0, c, x.b, Rational(1)));
  acc.add(x.ap(x.n) * ipow(-x.n, x.p) * sum_even(x.p, x.q, x.p, x.q, x.n, c, x.a, Rational(1)));
  acc.add(-0.5 * ipow(-x.n, -x.q) * sum_theta_n(x.p, x.q, x.n, x.q, x.p, x.a, c, x.b));
  return acc;
}

Acc bbp_o(const Ctx& x) {
  const Sign c = x.a.pow(x.n) * x.b;
  Acc acc;
  acc.add(ipow(2, -x.q - 1) * (1 - x.sgn(x.p)) * (phi(x.a, x.q, kHalf) * phi1(x.b, x.p)));
  acc.add(-x.ap(x.n - 1) * ipow(-2, -x.q) * ipow(x.n, x.p) * sum_even(x.p, x.q, x.p, x.q, x.n, c, x.a, kHalf));
  acc.add(-0.5 * x.sa * ipow(-2 * x.n, -x.q) * sum_theta_2n(x.p, x.q, x.n, x.q, x.p, x.a, c, x.b));
  return acc;
}

}  // namespace

RealScalar eval_theorem(const Family& family, const Params& params) {
  const auto v = validate_params(family, params);
  if (!v.ok) throw ValidationError(v);
  const Ctx x(params);
  const bool ii = family.variant == Variant::ii;
  Acc r;
  switch (family.tag) {
    case FamilyTag::INT_INF_1: r = int_inf_1(x); break;
    case FamilyTag::INT_INF_2: r = int_inf_2(x); break;
    case FamilyTag::INT_UNIT_1: r = int_unit_1(x, ii); break;
    case FamilyTag::INT_UNIT_2: r = int_unit_2(x, ii); break;
    case FamilyTag::EULER_H: r = euler_h(x); break;
    case FamilyTag::EULER_O: r = euler_o(x); break;
    case FamilyTag::BBP_H: r = bbp_h(x); break;
    case FamilyTag::BBP_O: r = bbp_o(x); break;
  }
  return detail::finish(r.sum, r.scale);
}

}  // namespace lerchlab::closedform
