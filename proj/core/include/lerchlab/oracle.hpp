#pragma once

// First-principles numerics for the left-hand sides: tanh-sinh quadrature
// with principal-value pole subtraction, generalized harmonic prefixes, and
// accelerated summation. No closed form is ever evaluated here.

#include <functional>
#include <memory>
#include <string_view>
#include <variant>
#include <vector>

#include "lerchlab/closedform.hpp"
#include "lerchlab/types.hpp"

namespace lerchlab::oracle {

struct QuadConfig {
  double abs_tol = 1e-11;
  int max_level = 12;

  // Throws ParameterError unless abs_tol >= 1e-14 and 1 <= max_level <= 16.
  void check() const;
};

enum class Accel { NONE, ALT_CVZ, EM_TAIL };

struct SumConfig {
  long max_terms = 200000;
  Accel accel = Accel::ALT_CVZ;
  int tail_order = 6;

  // Throws ParameterError unless max_terms >= 1000 and 1 <= tail_order <= 8.
  void check() const;
};

std::string_view to_string(Accel a);
Accel parse_accel(std::string_view text);

// ---------------------------------------------------------------------------
// Quadrature

// Integrand on (lo, hi); receives x together with x - lo and hi - x so that
// endpoint behaviour can be evaluated without cancellation.
using EndpointFn = std::function<double(double x, double dlo, double dhi)>;

// Double-exponential quadrature on (lo, hi). Levels halve the step; the
// error is the difference of the last two levels. Throws NonConvergedError
// if abs_tol is not met at max_level.
RealScalar tanh_sinh(const EndpointFn& f, double lo, double hi, const QuadConfig& cfg = {});

// int_0^1 x^{s-1} ln^{q-1}(x) / (1 - c x^r) dx
struct Lemma3Integral {
  Sign c;
  int q = 2;
  int s = 1;
  int r = 1;
};

// int_0^inf ln^{q-1}(x)/x (1/(1 - a x) - 1/(1 - b y x^n)) dx, 0 < y < 1
struct Lemma5Integral {
  int q = 2;
  int n = 1;
  Sign a;
  Sign b;
  double y = 0.5;
};

// One of the theorem integrals (INT_UNIT_* on (0,1), INT_INF_* on (0,inf)).
struct FamilyIntegral {
  closedform::Family family;
  closedform::Params params;
};

// INT_INF_1 / INT_INF_2 after x -> 1/x:
//   int_0^inf ln^{q-1}(x) Li_p(b x^{-n}) / (1 - a x) dx        (INT_INF_1)
//   int_0^inf ln^{q-1}(x) Li_p(b x^{-2n}) / (1 - a x^2) dx     (INT_INF_2)
struct ReflectedIntegral {
  closedform::FamilyTag base = closedform::FamilyTag::INT_INF_1;
  closedform::Params params;
};

using UnitIntegral = std::variant<FamilyIntegral, Lemma3Integral>;
using HalfLineIntegral = std::variant<FamilyIntegral, Lemma5Integral, ReflectedIntegral>;

RealScalar quad_unit(const UnitIntegral& what, const QuadConfig& cfg = {});
RealScalar quad_halfline(const HalfLineIntegral& what, const QuadConfig& cfg = {});

// Re Li_p(y) for y > 1 as the principal value
//   (-1)^{p-1}/(p-1)! PV int_0^1 y ln^{p-1}(t) / (1 - y t) dt.
RealScalar pv_polylog_re(int p, double y, const QuadConfig& cfg = {});

// ---------------------------------------------------------------------------
// Harmonic numbers

enum class HarmonicKind { H, O };

// Prefix sums sum_{m<=k} b^{m-1}/m^p (H) or b^{m-1}/(2m-1)^p (O), built once
// with compensated summation and immutable afterwards.
class HarmonicCache {
 public:
  HarmonicCache(HarmonicKind kind, int p, Sign b, long size);

  HarmonicKind kind() const { return kind_; }
  int p() const { return p_; }
  Sign b() const { return b_; }
  long size() const { return static_cast<long>(prefix_.size()) - 1; }

  // prefix[k] for 0 <= k <= size(); throws ParameterError beyond.
  double operator[](long k) const;

 private:
  HarmonicKind kind_;
  int p_;
  Sign b_;
  std::vector<double> prefix_;
};

// The finite sum, from a shared cache grown on demand.
RealScalar gen_harmonic(HarmonicKind kind, long k, int p, Sign b);

// ---------------------------------------------------------------------------
// Summation

// sum_{k>=0} (-1)^k c(k) by the Cohen-Rodriguez Villegas-Zagier weights.
RealScalar accel_alternating(const std::function<double(long)>& c, int N = 40);

// A smooth term g with analytic derivatives and tail integral.
struct SmoothTerm {
  std::function<double(double x, int order)> deriv;  // g^{(order)}(x)
  std::function<double(double x)> tail_integral;     // int_x^inf g
};

// c * x^{-s} ln^e(x) for e in {0, 1}; s > 1 for a finite tail integral.
SmoothTerm power_log_term(double s, int e, double c = 1.0);

// sum_{k>N} g(k) by Euler-Maclaurin with Bernoulli terms through B_{2 order}.
RealScalar em_tail(const SmoothTerm& g, long N, int order);

// sum_{k>N} (-1)^k g(k) by Boole summation through derivative 2 order + 1.
RealScalar boole_tail(const SmoothTerm& g, long N, int order);

RealScalar sum_euler(const closedform::Family& family, const closedform::Params& params,
                     const SumConfig& cfg = {});
RealScalar sum_bbp(const closedform::Family& family, const closedform::Params& params,
                   const SumConfig& cfg = {});

// Dispatches on the family: quadrature for the integrals, summation otherwise.
RealScalar evaluate(const closedform::Family& family, const closedform::Params& params,
                    const QuadConfig& qcfg = {}, const SumConfig& scfg = {});

}  // namespace lerchlab::oracle
