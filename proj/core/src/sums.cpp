// Summation oracles for the Euler and BBP families.
//
// Every series is split into pieces sum_{k>=1} sigma^k c_k with sigma = +-1
// and c_k smooth with a known expansion c_k ~ sum c k^{-s} ln^e(k):
//
//   X_M = L - b^M R(M)          (finite limit L of the harmonic number)
//   X_M = ln-type expansion     (p = 1, b = 1, where L is infinite)
//
// R(M) = sum_{i>=0} b^i (M + x0 + i)^{-p} (x0 = 1 for H, with 2^{-p} and
// x0 = 1/2 for O) has the classical expansions
//   b = +1: M^{1-p}/(p-1) + sum_{k>=1} B_k(1-x0)/k! (p)_{k-1} M^{-p-k+1}
//   b = -1: 1/2 sum_{k>=0} E_k(1-x0)/k! (p)_k M^{-p-k}
// and for p = 1, b = 1
//   H_M = ln M + gamma + 1/(2M) - sum_j B_{2j}/(2j) M^{-2j}
//   O_M = (ln M + gamma)/2 + ln 2 + 1/2 sum_k (-1)^{k+1} B_k(1/2)/k M^{-k}.
//
// sigma = -1 pieces go through CVZ after a short direct head; sigma = +1
// pieces are summed directly to K and closed with Euler-Maclaurin tails.
// The limit L itself is read off the prefix table plus R at its last index.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/constants/constants.hpp>

#include "lerchlab/errors.hpp"
#include "lerchlab/oracle.hpp"
#include "lerchlab/specfun.hpp"
#include "numeric_detail.hpp"
#include "oracle_detail.hpp"

namespace lerchlab::oracle {

using closedform::Family;
using closedform::FamilyTag;
using closedform::Params;
using lerchlab::detail::ipow;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr long kDirectTerms = 1000;
constexpr long kCvzHead = 8;
constexpr int kCvzN = 40;
constexpr double kTarget = 1e-9;

struct Mono {
  double c;
  double s;  // power of 1/k
  int e;     // power of ln k
};
using Expansion = std::vector<Mono>;

Expansion times(const Expansion& x, const Expansion& y, double s_cap) {
  Expansion out;
  for (const Mono& u : x) {
    for (const Mono& v : y) {
      if (u.s + v.s > s_cap) continue;
      out.push_back({u.c * v.c, u.s + v.s, u.e + v.e});
    }
  }
  return out;
}

Expansion scaled(Expansion x, double f) {
  for (Mono& m : x) m.c *= f;
  return x;
}

double eval(const Expansion& x, double k) {
  double v = 0.0;
  const double lk = std::log(k);
  for (const Mono& m : x) v += m.c * std::pow(k, -m.s) * (m.e ? lk : 1.0);
  return v;
}

double rising(double p, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= p + i;
  return r;
}

double fact(int k) { return std::tgamma(k + 1.0); }

// E_k(0), via Bernoulli numbers.
double euler_poly_at_0(int k) {
  if (k == 0) return 1.0;
  return -2.0 * (std::ldexp(1.0, k + 1) - 1.0) * specfun::bernoulli(k + 1) / (k + 1);
}

// The harmonic numbers X_M of one kind, with limit and remainder expansions
// in powers of 1/M.
class Harmonic {
 public:
  Harmonic(HarmonicKind kind, int p, Sign b, long max_index, int terms)
      : kind_(kind), p_(p), b_(b), finite_(!(p == 1 && b.is_plus())) {
    const long size = std::max(max_index, 1024L);
    cache_ = detail::shared_cache(kind, p, b, size);
    top_ = size;
    if (finite_) {
      rem_ = remainder_expansion(terms);
      const double r_top = eval(rem_, static_cast<double>(top_));
      limit_ = (*cache_)[top_] + b_.pow(top_).as_double() * r_top;
    } else {
      full_ = log_expansion(terms);
    }
  }

  bool finite() const { return finite_; }
  double limit() const { return limit_; }
  double at(long M) const { return (*cache_)[M]; }
  // b^M (L - X_M)
  double remainder(long M) const { return b_.pow(M).as_double() * (limit_ - (*cache_)[M]); }

  // Expansion in k of R(n k) (finite) or X_{n k} (infinite limit).
  Expansion in_k(double n) const {
    const Expansion& src = finite_ ? rem_ : full_;
    Expansion out;
    const double ln_n = std::log(n);
    for (const Mono& m : src) {
      const double f = std::pow(n, -m.s);
      if (m.e == 0) {
        out.push_back({m.c * f, m.s, 0});
      } else {
        out.push_back({m.c * f * ln_n, m.s, 0});
        out.push_back({m.c * f, m.s, 1});
      }
    }
    return out;
  }

 private:
  Expansion remainder_expansion(int terms) const {
    Expansion out;
    const double p = p_;
    const bool odd = kind_ == HarmonicKind::O;
    const double pre = odd ? std::ldexp(1.0, -p_) : 1.0;
    if (b_.is_plus()) {
      out.push_back({pre / (p - 1.0), p - 1.0, 0});
      for (int k = 1; k <= terms; ++k) {
        const double bk = odd ? (std::ldexp(1.0, 1 - k) - 1.0) * specfun::bernoulli(k) : specfun::bernoulli(k);
        if (bk == 0.0) continue;
        out.push_back({pre * bk / fact(k) * rising(p, k - 1), p + k - 1.0, 0});
      }
    } else {
      for (int k = 0; k <= terms; ++k) {
        const double ek = odd ? std::ldexp(specfun::euler_number(k), -k) : euler_poly_at_0(k);
        if (ek == 0.0) continue;
        out.push_back({pre * 0.5 * ek / fact(k) * rising(p, k), p + k, 0});
      }
    }
    return out;
  }

  Expansion log_expansion(int terms) const {
    using boost::math::constants::euler;
    Expansion out;
    if (kind_ == HarmonicKind::H) {
      out.push_back({1.0, 0.0, 1});
      out.push_back({euler<double>(), 0.0, 0});
      out.push_back({0.5, 1.0, 0});
      for (int j = 1; 2 * j <= terms; ++j) out.push_back({-specfun::bernoulli(2 * j) / (2 * j), 2.0 * j, 0});
    } else {
      out.push_back({0.5, 0.0, 1});
      out.push_back({0.5 * euler<double>() + std::numbers::ln2, 0.0, 0});
      for (int k = 2; k <= terms; ++k) {
        const double bk = (std::ldexp(1.0, 1 - k) - 1.0) * specfun::bernoulli(k);
        if (bk == 0.0) continue;
        out.push_back({0.5 * (k % 2 == 1 ? 1.0 : -1.0) * bk / k, static_cast<double>(k), 0});
      }
    }
    return out;
  }

  HarmonicKind kind_;
  int p_;
  Sign b_;
  bool finite_;
  std::shared_ptr<const HarmonicCache> cache_;
  long top_ = 0;
  double limit_ = 0.0;
  Expansion rem_;
  Expansion full_;
};

struct Piece {
  int sigma;
  std::function<double(long)> term;
  Expansion asym;
  bool exact = false;  // asym is the whole of c_k, not a truncation
};

struct Sum {
  double value = 0.0;
  double err = 0.0;
  void add(double v, double e) {
    value += v;
    err += e;
  }
};

// Compensated sum of sigma^k term(k) for k = from..to.
Sum direct(const Piece& pc, long from, long to) {
  double s = 0.0;
  double comp = 0.0;
  double mag = 0.0;
  for (long k = from; k <= to; ++k) {
    const double t = (pc.sigma < 0 && k % 2 == 1 ? -1.0 : 1.0) * pc.term(k);
    const double u = s + t;
    comp += std::abs(s) >= std::abs(t) ? (s - u) + t : (t - u) + s;
    s = u;
    mag += std::abs(t);
  }
  return {s + comp, 4.0 * kEps * mag};
}

Sum tail(const Piece& pc, long K, int order) {
  Sum out;
  for (const Mono& m : pc.asym) {
    if (m.c == 0.0) continue;
    const SmoothTerm g = power_log_term(m.s, m.e, m.c);
    const RealScalar r = pc.sigma > 0 ? em_tail(g, K, order) : boole_tail(g, K, order);
    out.add(r.value, r.err);
  }
  if (pc.exact) return out;
  // Dropped orders start one power of 1/K beyond the last kept one.
  double s_max = 0.0;
  for (const Mono& m : pc.asym) s_max = std::max(s_max, m.s);
  double dropped = 0.0;
  for (const Mono& m : pc.asym) {
    if (m.s == s_max) dropped += std::abs(m.c) * std::pow(static_cast<double>(K), -m.s);
  }
  out.err += dropped;
  return out;
}

Sum sum_piece(const Piece& pc, const SumConfig& cfg) {
  if (cfg.accel == Accel::NONE) {
    const long K = cfg.max_terms;
    Sum s = direct(pc, 1, K);
    const double next = pc.term(K + 1);
    if (pc.sigma < 0) {
      const double t = (K + 1) % 2 == 1 ? -next : next;
      s.value += 0.5 * t;
      s.err += 0.5 * std::abs(next);
    } else {
      // Leading-order tail bracket; the partial sum itself is reported.
      double bracket = 0.0;
      for (const Mono& m : pc.asym) {
        if (m.c == 0.0) continue;
        bracket = std::max(bracket, std::abs(power_log_term(m.s, m.e, m.c).tail_integral(static_cast<double>(K))));
      }
      s.err += bracket;
    }
    return s;
  }
  if (pc.sigma < 0 && cfg.accel == Accel::ALT_CVZ) {
    Sum s = direct(pc, 1, kCvzHead);
    const double sign = (kCvzHead + 1) % 2 == 1 ? -1.0 : 1.0;
    auto shifted = [&](long i) { return pc.term(kCvzHead + 1 + i); };
    const RealScalar hi = accel_alternating(shifted, kCvzN);
    const RealScalar lo = accel_alternating(shifted, kCvzN - 8);
    s.add(sign * hi.value, hi.err + std::abs(hi.value - lo.value));
    return s;
  }
  const long K = std::min(cfg.max_terms, kDirectTerms);
  Sum s = direct(pc, 1, K);
  const Sum t = tail(pc, K, cfg.tail_order);
  s.add(t.value, t.err);
  return s;
}

RealScalar finish(const std::vector<Piece>& pieces, const SumConfig& cfg, const char* what) {
  Sum total;
  for (const Piece& pc : pieces) {
    const Sum s = sum_piece(pc, cfg);
    total.add(s.value, s.err);
  }
  if (!std::isfinite(total.value) || total.err > kTarget * std::max(1.0, std::abs(total.value))) {
    throw NonConvergedError(std::string(what) + ": error target not met", total.value, total.err);
  }
  return {total.value, total.err};
}

long needed_terms(const SumConfig& cfg) {
  if (cfg.accel == Accel::NONE) return cfg.max_terms + 1;
  return std::max(std::min(cfg.max_terms, kDirectTerms), kCvzHead + kCvzN) + 1;
}

int asym_terms(const SumConfig& cfg) { return 2 * cfg.tail_order + 6; }

void require_valid(const Family& family, const Params& params) {
  const auto v = closedform::validate_params(family, params);
  if (!v.ok) throw closedform::ValidationError(v);
}

}  // namespace

RealScalar sum_euler(const Family& family, const Params& x, const SumConfig& cfg) {
  cfg.check();
  if (family.tag != FamilyTag::EULER_H && family.tag != FamilyTag::EULER_O) {
    throw ParameterError("sum_euler handles EULER_H and EULER_O only");
  }
  require_valid(family, x);
  const HarmonicKind kind = family.tag == FamilyTag::EULER_H ? HarmonicKind::H : HarmonicKind::O;
  const long K = needed_terms(cfg);
  const int J = asym_terms(cfg);
  const Harmonic h(kind, x.p, x.b, x.n * K, J);
  const double q = x.q;
  const long n = x.n;
  const int sa = x.a.value();
  const Expansion kq{{1.0, q, 0}};
  const double cap = q + x.p + J;

  std::vector<Piece> pieces;
  if (h.finite()) {
    const double L = h.limit();
    pieces.push_back({sa, [L, q](long k) { return L * std::pow(static_cast<double>(k), -q); }, {{L, q, 0}}, true});
    const int sigma = sa * x.b.pow(n).value();
    pieces.push_back({sigma,
                      [&h, n, q](long k) { return -h.remainder(n * k) * std::pow(static_cast<double>(k), -q); },
                      scaled(times(h.in_k(static_cast<double>(n)), kq, cap), -1.0)});
  } else {
    pieces.push_back({sa, [&h, n, q](long k) { return h.at(n * k) * std::pow(static_cast<double>(k), -q); },
                      times(h.in_k(static_cast<double>(n)), kq, cap)});
  }
  return finish(pieces, cfg, "sum_euler");
}

RealScalar sum_bbp(const Family& family, const Params& x, const SumConfig& cfg) {
  cfg.check();
  if (family.tag != FamilyTag::BBP_H && family.tag != FamilyTag::BBP_O) {
    throw ParameterError("sum_bbp handles BBP_H and BBP_O only");
  }
  require_valid(family, x);
  const bool odd = family.tag == FamilyTag::BBP_O;
  const long K = needed_terms(cfg);
  const int J = asym_terms(cfg);
  const Harmonic h(HarmonicKind::H, x.p, x.b, K, J);
  const int n = x.n;
  const int q = x.q;
  const double sa = x.a.as_double();

  // w_k = sum_j a^{j-1} / (n k + j)^q, or / (2 n k + 2 j - 1)^q.
  auto weight = [n, q, sa, odd](long k) {
    double w = 0.0;
    double aj = 1.0;
    for (int j = 1; j <= n; ++j) {
      const double den = odd ? 2.0 * n * k + 2.0 * j - 1.0 : static_cast<double>(n) * k + j;
      w += aj * std::pow(den, -q);
      aj *= sa;
    }
    return w;
  };
  // (D k + d)^{-q} = (D k)^{-q} sum_i binom(-q, i) (d/D)^i k^{-i}
  Expansion wexp;
  const double D = odd ? 2.0 * n : n;
  for (int i = 0; i <= J; ++i) {
    double moment = 0.0;
    double aj = 1.0;
    for (int j = 1; j <= n; ++j) {
      const double d = odd ? 2.0 * j - 1.0 : j;
      moment += aj * std::pow(d, i);
      aj *= sa;
    }
    const double binom = (i % 2 == 0 ? 1.0 : -1.0) * rising(q, i) / fact(i);
    const double c = binom * moment * std::pow(D, -q - i);
    if (c != 0.0) wexp.push_back({c, static_cast<double>(q + i), 0});
  }
  const double cap = q + x.p + J;
  const int sigma_outer = x.a.pow(n).value();

  std::vector<Piece> pieces;
  if (h.finite()) {
    const double L = h.limit();
    pieces.push_back({sigma_outer, [L, weight](long k) { return L * weight(k); }, scaled(wexp, L)});
    pieces.push_back({sigma_outer * x.b.value(), [&h, weight](long k) { return -h.remainder(k) * weight(k); },
                      scaled(times(h.in_k(1.0), wexp, cap), -1.0)});
  } else {
    pieces.push_back({sigma_outer, [&h, weight](long k) { return h.at(k) * weight(k); },
                      times(h.in_k(1.0), wexp, cap)});
  }
  return finish(pieces, cfg, "sum_bbp");
}

RealScalar evaluate(const Family& family, const Params& params, const QuadConfig& qcfg, const SumConfig& scfg) {
  switch (family.tag) {
    case FamilyTag::INT_UNIT_1:
    case FamilyTag::INT_UNIT_2:
      return quad_unit(FamilyIntegral{family, params}, qcfg);
    case FamilyTag::INT_INF_1:
    case FamilyTag::INT_INF_2:
      return quad_halfline(FamilyIntegral{family, params}, qcfg);
    case FamilyTag::EULER_H:
    case FamilyTag::EULER_O:
      return sum_euler(family, params, scfg);
    case FamilyTag::BBP_H:
    case FamilyTag::BBP_O:
      return sum_bbp(family, params, scfg);
  }
  throw ParameterError("unknown family");
}

}  // namespace lerchlab::oracle
