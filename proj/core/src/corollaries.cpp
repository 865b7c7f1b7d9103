// Sign-specialized corollaries, transcribed term by term in the reduced
// constants zeta/eta/lambda/beta. Nothing here is shared with theorems.cpp
// beyond the scalar helpers, so the two paths can be compared.

#include <functional>

#include "lerchlab/closedform.hpp"
#include "lerchlab/errors.hpp"
#include "laurent.hpp"
#include "numeric_detail.hpp"

namespace lerchlab::closedform {

namespace {

using detail::Acc;
using detail::Lv;
using lerchlab::detail::binomial;
using lerchlab::detail::factorial;
using lerchlab::detail::ipow;
using lerchlab::detail::neg_one_pow;

using ConstFn = std::function<Lv(int)>;

const ConstFn kZeta = [](int s) { return detail::zeta(s); };
const ConstFn kEta = [](int s) { return detail::eta(s); };
const ConstFn kLambda = [](int s) { return detail::lambda(s); };
const ConstFn kBeta = [](int s) { return detail::beta(s); };

ConstFn phi_at_one(Sign c) {
  return [c](int s) { return detail::phi(c, s, Rational(1)); };
}

struct Cor {
  int p, q, n, w;  // w = p + q
  double f;        // (q-1)!
  Sign sn, sn1;    // (-1)^n, (-1)^{n-1}

  explicit Cor(const Params& x)
      : p(x.p), q(x.q), n(x.n), w(x.p + x.q), f(static_cast<double>(factorial(x.q - 1))),
        sn(parity(x.n)), sn1(parity(x.n - 1)) {}

  static double m1(int e) { return neg_one_pow(e); }

  // sum_{j=0}^{top} C(w-2j-1, m-1) r^{-2j} F(2j) G(w-2j)
  Lv even(int top, int m, double r, const ConstFn& F, const ConstFn& G) const {
    Lv s;
    for (int j = 0; j <= top; ++j) {
      s += static_cast<double>(binomial(w - 2 * j - 1, m - 1)) * ipow(r, -2 * j) * (F(2 * j) * G(w - 2 * j));
    }
    return s;
  }

  // sum_{j=2}^{n} sum_{k=1}^{K} C(w-k-1, m-1) sj^j (-1)^k Theta(tc,k,j-1,n) Phi(pc,w-k,(n-j+1)/n)
  Lv dbl(int K, int m, double sj, Sign tc, Sign pc) const {
    Lv s;
    for (int j = 2; j <= n; ++j) {
      for (int k = 1; k <= K; ++k) {
        const double c = static_cast<double>(binomial(w - k - 1, m - 1)) * ipow(sj, j) * m1(k);
        s += c * (detail::theta(tc, k, j - 1, n) * detail::phi(pc, w - k, Rational(n - j + 1, n)));
      }
    }
    return s;
  }

  // j = 1..n with Theta(tc,k,2j-1,2n) and alpha = (2n-2j+1)/(2n)
  Lv dbl2(int K, int m, double sj, Sign tc, Sign pc) const {
    Lv s;
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= K; ++k) {
        const double c = static_cast<double>(binomial(w - k - 1, m - 1)) * ipow(sj, j) * m1(k);
        s += c * (detail::theta(tc, k, 2 * j - 1, 2 * n) *
                  detail::phi(pc, w - k, Rational(2 * n - 2 * j + 1, 2 * n)));
      }
    }
    return s;
  }
};

const Sign kP = Sign::plus();
const Sign kM = Sign::minus();

// int_0^1 ln^{q-1}(x) Li_p(+-x^n)/(1 -+ x) dx
Acc unit1(const Cor& c, Sign a, Sign b) {
  Acc r;
  const int p = c.p, q = c.q, n = c.n;
  const double f = c.f;
  const double nn = n;
  if (a.is_plus() && b.is_plus()) {
    r.add(0.5 * Cor::m1(q) * f * ipow(nn, -q) * kZeta(p + q));
    r.add(-0.5 * (1 + Cor::m1(q)) * f * (kZeta(p) * kZeta(q)));
    r.add(ipow(nn, p) * f * c.even(p / 2, q, nn, kZeta, kZeta));
    r.add(ipow(nn, -q) * f * c.even(q / 2, p, 1.0, kZeta, kZeta));
    r.add(0.5 * ipow(nn, -q) * f * c.dbl(q, p, 1.0, kP, kP));
  } else if (a.is_plus()) {
    r.add(-0.5 * Cor::m1(q) * f * ipow(nn, -q) * kEta(p + q));
    r.add(0.5 * (1 + Cor::m1(q)) * f * (kEta(p) * kZeta(q)));
    r.add(-ipow(nn, p) * f * c.even(p / 2, q, nn, kEta, kZeta));
    r.add(ipow(nn, -q) * f * c.even(q / 2, p, 1.0, kEta, kEta));
    r.add(-0.5 * ipow(nn, -q) * f * c.dbl(q, p, 1.0, kM, kM));
  } else if (b.is_plus()) {
    const auto phiN = phi_at_one(c.sn);
    const double sn = c.sn.as_double();
    r.add(-0.5 * Cor::m1(q) * f * ipow(nn, -q) * kZeta(p + q));
    r.add(-0.5 * sn * (1 + Cor::m1(q)) * f * (kEta(q) * phiN(p)));
    r.add(ipow(nn, p) * f * c.even(p / 2, q, nn, kZeta, kEta));
    r.add(-sn * ipow(nn, -q) * f * c.even(q / 2, p, 1.0, kZeta, phiN));
    r.add(0.5 * sn * ipow(nn, -q) * f * c.dbl(q, p, -1.0, kP, c.sn));
  } else {
    const auto phiN1 = phi_at_one(c.sn1);
    const double sn = c.sn.as_double();
    r.add(0.5 * Cor::m1(q) * ipow(nn, -q) * f * kEta(p + q));
    r.add(0.5 * sn * (1 + Cor::m1(q)) * f * (kEta(q) * phiN1(p)));
    r.add(-ipow(nn, p) * f * c.even(p / 2, q, nn, kEta, kEta));
    r.add(-sn * ipow(nn, -q) * f * c.even(q / 2, p, 1.0, kEta, phiN1));
    r.add(-0.5 * sn * ipow(nn, -q) * f * c.dbl(q, p, -1.0, kM, c.sn1));
  }
  return r;
}

// int_0^1 ln^{q-1}(x) Li_p(+-x^{2n})/(1 -+ x^2) dx
Acc unit2(const Cor& c, Sign a, Sign b) {
  Acc r;
  const int p = c.p, q = c.q;
  const double f = c.f;
  const double tn = 2.0 * c.n;
  const double odd_p = 1 - Cor::m1(p);
  if (a.is_plus() && b.is_plus()) {
    r.add(-0.5 * f * odd_p * (kLambda(q) * kZeta(p)));
    r.add(ipow(tn, p) * f * c.even(p / 2, q, tn, kZeta, kLambda));
    r.add(0.5 * ipow(tn, -q) * f * c.dbl2(q, p, 1.0, kP, kP));
  } else if (a.is_plus()) {
    r.add(0.5 * f * odd_p * (kLambda(q) * kEta(p)));
    r.add(-ipow(tn, p) * f * c.even(p / 2, q, tn, kEta, kLambda));
    r.add(-0.5 * ipow(tn, -q) * f * c.dbl2(q, p, 1.0, kM, kM));
  } else if (b.is_plus()) {
    const double sn = c.sn.as_double();
    r.add(-0.5 * c.sn1.as_double() * f * odd_p * (kBeta(q) * phi_at_one(c.sn)(p)));
    r.add(-ipow(tn, p) * f * c.even(p / 2, q, tn, kZeta, kBeta));
    r.add(-0.5 * sn * ipow(tn, -q) * f * c.dbl2(q, p, -1.0, kP, c.sn));
  } else {
    const double sn = c.sn.as_double();
    r.add(-0.5 * sn * f * odd_p * (kBeta(q) * phi_at_one(c.sn1)(p)));
    r.add(ipow(tn, p) * f * c.even(p / 2, q, tn, kEta, kBeta));
    r.add(0.5 * sn * ipow(tn, -q) * f * c.dbl2(q, p, -1.0, kM, c.sn1));
  }
  return r;
}

// sum_k (+-1)^k H_{nk}^{(p)}(+-1) / k^q
Acc euler_h(const Cor& c, Sign a, Sign b) {
  Acc r;
  const int p = c.p, q = c.q;
  const double nn = c.n;
  const double odd_p = 1 - Cor::m1(p);
  const double mnp = ipow(-nn, -p);
  const double mnq = ipow(-nn, q);
  if (b.is_plus() && a.is_plus()) {
    r.add(0.5 * odd_p * (kZeta(q) * kZeta(p)));
    r.add(0.5 * ipow(nn, -p) * kZeta(p + q));
    r.add(mnp * c.even(p / 2, q, 1.0, kZeta, kZeta));
    r.add(-mnq * c.even(q / 2, p, nn, kZeta, kZeta));
    r.add(0.5 * mnp * c.dbl(p, q, 1.0, kP, kP));
  } else if (b.is_plus()) {
    r.add(-0.5 * odd_p * (kEta(q) * kZeta(p)));
    r.add(-0.5 * ipow(nn, -p) * kEta(p + q));
    r.add(mnp * c.even(p / 2, q, 1.0, kEta, kEta));
    r.add(mnq * c.even(q / 2, p, nn, kEta, kZeta));
    r.add(-0.5 * mnp * c.dbl(p, q, 1.0, kM, kM));
  } else if (a.is_plus()) {
    const auto phiN = phi_at_one(c.sn);
    const double sn = c.sn.as_double();
    r.add(0.5 * odd_p * (kZeta(q) * kEta(p)));
    r.add(-0.5 * sn * ipow(nn, -p) * phiN(p + q));
    r.add(-sn * mnp * c.even(p / 2, q, 1.0, phiN, kZeta));
    r.add(-sn * mnq * c.even(q / 2, p, nn, phiN, kEta));
    r.add(0.5 * mnp * c.dbl(p, q, -1.0, c.sn, kP));
  } else {
    const auto phiN1 = phi_at_one(c.sn1);
    const double sn = c.sn.as_double();
    r.add(-0.5 * odd_p * (kEta(q) * kEta(p)));
    r.add(0.5 * sn * ipow(nn, -p) * phiN1(p + q));
    r.add(-sn * mnp * c.even(p / 2, q, 1.0, phiN1, kEta));
    r.add(sn * mnq * c.even(q / 2, p, nn, phiN1, kEta));
    r.add(-0.5 * mnp * c.dbl(p, q, -1.0, c.sn1, kM));
  }
  return r;
}

// sum_k (+-1)^k O_{nk}^{(p)}(+-1) / k^q
Acc euler_o(const Cor& c, Sign a, Sign b) {
  Acc r;
  const int p = c.p, q = c.q;
  const double tn = 2.0 * c.n;
  const double even_q = 1 + Cor::m1(q);
  const double m2q = ipow(-tn, q);
  const double m2p = ipow(-tn, -p);
  if (b.is_plus() && a.is_plus()) {
    r.add(0.5 * even_q * (kZeta(q) * kLambda(p)));
    r.add(-m2q * c.even(q / 2, p, tn, kZeta, kLambda));
    r.add(0.5 * m2p * c.dbl2(p, q, 1.0, kP, kP));
  } else if (b.is_plus()) {
    r.add(-0.5 * even_q * (kEta(q) * kLambda(p)));
    r.add(m2q * c.even(q / 2, p, tn, kEta, kLambda));
    r.add(-0.5 * m2p * c.dbl2(p, q, 1.0, kM, kM));
  } else if (a.is_plus()) {
    const double sn = c.sn.as_double();
    r.add(0.5 * even_q * (kZeta(q) * kBeta(p)));
    r.add(-sn * m2q * c.even(q / 2, p, tn, phi_at_one(c.sn), kBeta));
    r.add(-0.5 * m2p * c.dbl2(p, q, -1.0, c.sn, kP));
  } else {
    const double sn = c.sn.as_double();
    r.add(-0.5 * even_q * (kEta(q) * kBeta(p)));
    r.add(sn * m2q * c.even(q / 2, p, tn, phi_at_one(c.sn1), kBeta));
    r.add(0.5 * m2p * c.dbl2(p, q, -1.0, c.sn1, kM));
  }
  return r;
}

// sum_k (a^n)^k H_k^{(p)}(b) sum_j a^{j-1}/(nk+j)^q
Acc bbp_h(const Cor& c, Sign a, Sign b) {
  Acc r;
  const int p = c.p, q = c.q;
  const double nn = c.n;
  const double even_q = 1 + Cor::m1(q);
  const double mnq = ipow(-nn, -q);
  const double mnp = ipow(-nn, p);
  if (a.is_plus() && b.is_plus()) {
    r.add(-0.5 * ipow(nn, -q) * kZeta(p + q));
    r.add(0.5 * even_q * (kZeta(p) * kZeta(q)));
    r.add(-mnq * c.even(q / 2, p, 1.0, kZeta, kZeta));
    r.add(mnp * c.even(p / 2, q, nn, kZeta, kZeta));
    r.add(-0.5 * mnq * c.dbl(q, p, 1.0, kP, kP));
  } else if (a.is_plus()) {
    r.add(-0.5 * ipow(nn, -q) * kEta(p + q));
    r.add(0.5 * even_q * (kEta(p) * kZeta(q)));
    r.add(0.5 * mnq * c.even(q / 2, p, 1.0, kEta, kEta));
    r.add(ipow(-nn, -p) * c.even(p / 2, q, nn, kEta, kZeta));
    r.add(-0.5 * mnq * c.dbl(q, p, 1.0, kM, kM));
  } else if (b.is_plus()) {
    const auto phiN = phi_at_one(c.sn);
    const double sn = c.sn.as_double();
    r.add(0.5 * sn * ipow(nn, -q) * phiN(p + q));
    r.add(0.5 * even_q * (kZeta(p) * kEta(q)));
    r.add(sn * mnq * c.even(q / 2, p, 1.0, phiN, kZeta));
    r.add(sn * mnp * c.even(p / 2, q, nn, phiN, kEta));
    r.add(-0.5 * mnq * c.dbl(q, p, -1.0, c.sn, kP));
  } else {
    const auto phiN1 = phi_at_one(c.sn1);
    const double sn = c.sn.as_double();
    r.add(0.5 * sn * ipow(nn, -q) * phiN1(p + q));
    r.add(0.5 * even_q * (kEta(p) * kEta(q)));
    r.add(-sn * mnq * c.even((q - 1) / 2, p, 1.0, phiN1, kEta));
    r.add(sn * mnp * c.even(p / 2, q, nn, phiN1, kEta));
    r.add(-0.5 * mnq * c.dbl(q, p, -1.0, c.sn1, kM));
  }
  return r;
}

// sum_k (a^n)^k H_k^{(p)}(b) sum_j a^{j-1}/(2nk+2j-1)^q
Acc bbp_o(const Cor& c, Sign a, Sign b) {
  Acc r;
  const int p = c.p, q = c.q;
  const double tn = 2.0 * c.n;
  const double odd_p = 1 - Cor::m1(p);
  const double m2p = ipow(-tn, p);
  const double m2q = ipow(-tn, -q);
  if (a.is_plus() && b.is_plus()) {
    r.add(0.5 * odd_p * (kLambda(q) * kZeta(p)));
    r.add(m2p * c.even(p / 2, q, tn, kZeta, kLambda));
    r.add(-0.5 * m2q * c.dbl2(q, p, 1.0, kP, kP));
  } else if (a.is_plus()) {
    r.add(0.5 * odd_p * (kLambda(q) * kEta(p)));
    r.add(m2p * c.even(p / 2, q, tn, kEta, kLambda));
    r.add(-0.5 * m2q * c.dbl2(q, p, 1.0, kM, kM));
  } else if (b.is_plus()) {
    const double sn = c.sn.as_double();
    r.add(0.5 * odd_p * (kBeta(q) * kZeta(p)));
    r.add(sn * m2p * c.even(p / 2, q, tn, phi_at_one(c.sn), kBeta));
    r.add(0.5 * m2q * c.dbl2(q, p, -1.0, c.sn, kP));
  } else {
    const double sn = c.sn.as_double();
    r.add(0.5 * odd_p * (kBeta(q) * kEta(p)));
    r.add(sn * m2p * c.even(p / 2, q, tn, phi_at_one(c.sn1), kBeta));
    r.add(0.5 * m2q * c.dbl2(q, p, -1.0, c.sn1, kM));
  }
  return r;
}

}  // namespace

bool has_corollary(const Family& family, const Params&) {
  switch (family.tag) {
    case FamilyTag::INT_INF_1:
    case FamilyTag::INT_INF_2:
      return false;
    case FamilyTag::INT_UNIT_1:
    case FamilyTag::INT_UNIT_2:
      return family.variant != Variant::ii;
    default:
      return true;
  }
}

RealScalar eval_corollary(const Family& family, const Params& params) {
  if (!has_corollary(family, params)) {
    throw UnsupportedCase("no corollary for family " + std::string(to_string(family.tag)) + " variant " +
                          std::string(to_string(family.variant)));
  }
  const auto v = validate_params(family, params);
  if (!v.ok) throw ValidationError(v);
  const Cor c(params);
  Acc r;
  switch (family.tag) {
    case FamilyTag::INT_UNIT_1: r = unit1(c, params.a, params.b); break;
    case FamilyTag::INT_UNIT_2: r = unit2(c, params.a, params.b); break;
    case FamilyTag::EULER_H: r = euler_h(c, params.a, params.b); break;
    case FamilyTag::EULER_O: r = euler_o(c, params.a, params.b); break;
    case FamilyTag::BBP_H: r = bbp_h(c, params.a, params.b); break;
    case FamilyTag::BBP_O: r = bbp_o(c, params.a, params.b); break;
    default: break;
  }
  return detail::finish(r.sum, r.scale);
}

}  // namespace lerchlab::closedform
