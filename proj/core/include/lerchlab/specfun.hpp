#pragma once

// Lerch transcendent at c = +-1 and the special functions it reduces to.
//
// Every routine returns a RealScalar whose err field bounds the absolute
// deviation of value from the exact result (truncation plus a rounding
// allowance). Rational arguments are exact; no decimal alpha is accepted.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lerchlab/types.hpp"

namespace lerchlab::specfun {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct BernoulliTable {
  std::vector<BigRational> entries;  // B_0 .. B_{2M}, with B_1 = -1/2
};

struct EulerNumberTable {
  std::vector<BigInt> entries;  // E_0 .. E_{2M}
};

inline constexpr int kMaxBernoulliM = 64;
inline constexpr int kMaxEulerM = 32;

// Exact Bernoulli numbers through index 2M, 1 <= M <= 64.
BernoulliTable bernoulli_numbers(int M);

// Exact Euler (secant) numbers through index 2M, 0 <= M <= 32.
EulerNumberTable euler_numbers(int M);

// Double views of the memoized tables; indices up to 2*kMax*M.
double bernoulli(int k);
double euler_number(int k);

// Argument record for the Lerch transcendent Phi(c, q, alpha).
struct LerchPoint {
  Sign c;
  int q = 2;
  Rational alpha{1};
};

// zeta(q, alpha) = sum_{n>=0} (n + alpha)^{-q} for integer q >= 2, alpha > 0.
// Euler-Maclaurin with a 20-term head and Bernoulli corrections through B_16.
RealScalar hurwitz_zeta(int q, const Rational& alpha);

// psi(alpha) for rational alpha > 0.
RealScalar digamma(const Rational& alpha);

// Phi(c, q, alpha) = sum_{n>=0} c^n / (n + alpha)^q for 0 < alpha <= 1.
// q = 0 is accepted only at alpha = 1, where it yields the continuation
// constants Phi(1,0,1) = -1/2 and Phi(-1,0,1) = 1/2. (c, q) = (+1, 1) diverges.
RealScalar lerch_phi(const LerchPoint& pt);
RealScalar lerch_phi(Sign c, int q, const Rational& alpha);

enum class Constant { zeta, eta, lambda, beta };

// zeta(s) = Phi(1,s,1), eta(s) = Phi(-1,s,1), lambda(s) = 2^-s Phi(1,s,1/2),
// beta(s) = 2^-s Phi(-1,s,1/2). Continuation values zeta(0) = -1/2 and
// eta(0) = 1/2 are returned; every other non-convergent s throws.
RealScalar reduced_constant(Constant kind, int s);

// Theta(c,q,s,r) = Phi(c,q,s/r) + c (-1)^q Phi(c,q,(r-s)/r), and pi cot(pi s/r)
// for (c, q) = (+1, 1). Requires 0 < s/r < 1.
RealScalar theta(Sign c, int q, int s, int r);

// Li_p(x) for real x in [-1, 1].
RealScalar polylog(int p, double x);

// Re Li_p(c / x) for x in (0, 1), from the inversion formula
//   Li_p(c x) + (-1)^p Li_p(c/x) = 2c sum_k ln^{p-2k}(x)/(p-2k)! Phi(c,2k,1).
RealScalar polylog_re_recip(int p, Sign c, double x);

// Li_p(c e^mu) for mu <= 0. Taking ln|z| directly keeps integrands accurate
// when |z| is within rounding of 1.
RealScalar polylog_exp(int p, Sign c, double mu);

// Re Li_p(c e^{-mu}) for mu < 0.
RealScalar polylog_re_recip_exp(int p, Sign c, double mu);

}  // namespace lerchlab::specfun
