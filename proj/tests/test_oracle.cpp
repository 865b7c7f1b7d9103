#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "frozen.hpp"
#include "lerchlab/closedform.hpp"
#include "lerchlab/errors.hpp"
#include "lerchlab/oracle.hpp"
#include "lerchlab/specfun.hpp"

using namespace lerchlab;
using namespace lerchlab::oracle;
using closedform::Family;
using closedform::FamilyTag;
using closedform::Params;
using closedform::Variant;

namespace {

const Sign P = Sign::plus();
const Sign M = Sign::minus();
constexpr double pi = std::numbers::pi;

double rel(double x, double ref) { return std::abs(x - ref) / std::max(1.0, std::abs(ref)); }

}  // namespace

TEST(Config, Checks) {
  EXPECT_THROW((QuadConfig{1e-15, 12}.check()), ParameterError);
  EXPECT_THROW((QuadConfig{1e-11, 17}.check()), ParameterError);
  EXPECT_NO_THROW((QuadConfig{1e-14, 16}.check()));
  EXPECT_THROW((SumConfig{999, Accel::ALT_CVZ, 6}.check()), ParameterError);
  EXPECT_THROW((SumConfig{1000, Accel::ALT_CVZ, 9}.check()), ParameterError);
  EXPECT_EQ(parse_accel("em_tail"), Accel::EM_TAIL);
  EXPECT_EQ(to_string(Accel::ALT_CVZ), "ALT_CVZ");
  EXPECT_THROW(parse_accel("fast"), ParameterError);
}

TEST(GenHarmonic, Examples) {
  EXPECT_EQ(gen_harmonic(HarmonicKind::H, 0, 1, P).value, 0.0);
  EXPECT_NEAR(gen_harmonic(HarmonicKind::H, 3, 1, P).value, 11.0 / 6.0, 1e-15);
  EXPECT_NEAR(gen_harmonic(HarmonicKind::O, 2, 1, M).value, 2.0 / 3.0, 1e-15);
  EXPECT_THROW(gen_harmonic(HarmonicKind::H, -1, 1, P), ParameterError);
}

TEST(HarmonicCache, Telescoping) {
  constexpr long kSize = 1000000;
  for (auto kind : {HarmonicKind::H, HarmonicKind::O}) {
    for (int p : {1, 2, 3}) {
      for (Sign b : {P, M}) {
        const HarmonicCache cache(kind, p, b, kSize);
        EXPECT_EQ(cache[0], 0.0);
        EXPECT_THROW(cache[kSize + 1], ParameterError);
        for (long k = 1; k <= kSize; k += (k < 1000 ? 1 : 997)) {
          const double m = kind == HarmonicKind::H ? static_cast<double>(k) : 2.0 * k - 1.0;
          const double term = b.pow(k - 1).as_double() / std::pow(m, p);
          const double diff = cache[k] - cache[k - 1];
          const double ulp = std::nextafter(std::abs(cache[k]), INFINITY) - std::abs(cache[k]);
          EXPECT_LE(std::abs(diff - term), 2 * ulp) << k;
        }
      }
    }
  }
}

TEST(TanhSinh, BasicIntegrals) {
  auto one = [](double, double, double) { return 1.0; };
  EXPECT_NEAR(tanh_sinh(one, 0, 2).value, 2.0, 1e-14);
  auto lg = [](double x, double, double) { return std::log(x) / (1 + x); };
  EXPECT_NEAR(tanh_sinh(lg, 0, 1).value, -pi * pi / 12, 1e-13);
  EXPECT_THROW(tanh_sinh(one, 1, 1), DomainError);
  auto rough = [](double x, double, double) { return std::sin(1 / x); };
  EXPECT_THROW(tanh_sinh(rough, 0, 1, QuadConfig{1e-14, 3}), NonConvergedError);
}

TEST(QuadUnit, Examples) {
  const auto l3 = quad_unit(Lemma3Integral{P, 2, 1, 2});
  EXPECT_NEAR(l3.value, -pi * pi / 8, 1e-11);
  EXPECT_LE(l3.err, 1e-11);
  for (auto [fam, x] : {std::pair{Family(FamilyTag::INT_UNIT_1, Variant::i), Params{2, 1, 1, M, M}},
                        std::pair{Family(FamilyTag::INT_UNIT_2, Variant::i), Params{1, 2, 1, P, M}}}) {
    const double v = quad_unit(FamilyIntegral{fam, x}).value;
    EXPECT_LE(std::abs(v - closedform::eval_theorem(fam, x).value), 1e-9);
  }
  EXPECT_THROW(quad_unit(FamilyIntegral{Family(FamilyTag::INT_UNIT_1), {2, 2, 1, P, P}}), closedform::ValidationError);
  EXPECT_THROW(quad_unit(FamilyIntegral{Family(FamilyTag::EULER_H), {1, 2, 1, P, P}}), ParameterError);
}

TEST(QuadUnit, SelfConsistentUnderTighterTolerance) {
  for (FamilyTag t : {FamilyTag::INT_UNIT_1, FamilyTag::INT_UNIT_2}) {
    for (Variant v : {Variant::i, Variant::ii}) {
      for (int p = 1; p < 7; ++p) {
        for (int q = 1; p + q <= 7; ++q) {
          for (int n = 1; n <= 3; ++n) {
            for (Sign a : {P, M}) {
              for (Sign b : {P, M}) {
                const Family f(t, v);
                const Params x{p, q, n, a, b};
                if (!closedform::validate_params(f, x).ok) continue;
                const double lo = quad_unit(FamilyIntegral{f, x}, QuadConfig{1e-11, 12}).value;
                const double hi = quad_unit(FamilyIntegral{f, x}, QuadConfig{1e-12, 14}).value;
                EXPECT_LE(std::abs(lo - hi), 5e-11);
              }
            }
          }
        }
      }
    }
  }
}

TEST(QuadHalfline, Examples) {
  for (FamilyTag t : {FamilyTag::INT_INF_1, FamilyTag::INT_INF_2}) {
    const Family f(t);
    const Params x{2, 2, 1, M, M};
    EXPECT_LE(std::abs(quad_halfline(FamilyIntegral{f, x}).value - closedform::eval_theorem(f, x).value), 1e-8);
  }
  const double l5 = quad_halfline(Lemma5Integral{2, 1, M, M, 0.5}).value;
  EXPECT_LE(std::abs(l5 - closedform::lemma5_value(2, 1, M, M, 0.5).value), 1e-8);
  EXPECT_THROW(quad_halfline(Lemma5Integral{1, 1, P, M, 0.5}), closedform::ValidationError);
  EXPECT_THROW(quad_halfline(Lemma5Integral{2, 1, P, M, 1.5}), DomainError);
}

TEST(QuadHalfline, Reflection) {
  int checked = 0;
  for (FamilyTag t : {FamilyTag::INT_INF_1, FamilyTag::INT_INF_2}) {
    for (int p = 1; p <= 4; ++p) {
      for (int q = 1; q <= 4; ++q) {
        for (int n = 1; n <= 2; ++n) {
          for (Sign a : {P, M}) {
            for (Sign b : {P, M}) {
              const Params x{p, q, n, a, b};
              if (!closedform::validate_params(Family(t), x).ok) continue;
              const double want = parity(q).as_double() * a.as_double() * closedform::eval_theorem(Family(t), x).value;
              const double got = quad_halfline(ReflectedIntegral{t, x}).value;
              EXPECT_LE(rel(got, want), 1e-8);
              ++checked;
            }
          }
        }
      }
    }
  }
  EXPECT_GE(checked, 10);
}

TEST(PvPolylog, Examples) {
  EXPECT_NEAR(pv_polylog_re(2, 2).value, pi * pi / 4, 1e-11);
  EXPECT_NEAR(pv_polylog_re(1, 2).value, 0.0, 1e-12);
  EXPECT_NEAR(pv_polylog_re(3, 4).value, specfun::polylog_re_recip(3, P, 0.25).value, 1e-10);
  EXPECT_THROW(pv_polylog_re(2, 1.0), DomainError);
}

TEST(PvPolylog, AgreesWithInversion) {
  for (int p = 1; p <= 5; ++p) {
    for (double y : {4.0 / 3.0, 2.0, 3.0, 10.0}) {
      EXPECT_LE(std::abs(pv_polylog_re(p, y).value - specfun::polylog_re_recip(p, P, 1 / y).value), 1e-10) << p << " " << y;
    }
  }
  // Li_3(-3) = 1/2 int_0^1 (-3) ln^2(t) / (1 + 3t) dt has no pole.
  auto f = [](double t, double, double) { return -1.5 * std::log(t) * std::log(t) / (1 + 3 * t); };
  EXPECT_NEAR(specfun::polylog_re_recip(3, M, 1.0 / 3.0).value, tanh_sinh(f, 0, 1).value, 1e-11);
}

TEST(AccelAlternating, Examples) {
  EXPECT_NEAR(accel_alternating([](long k) { return 1.0 / (k + 1); }).value, std::numbers::ln2, 1e-15);
  EXPECT_NEAR(accel_alternating([](long k) { return 1.0 / (2 * k + 1); }).value, pi / 4, 1e-15);
  EXPECT_NEAR(accel_alternating([](long k) { return k == 0 ? 1.0 : 0.0; }).value, 1.0, 1e-15);
}

TEST(EmTail, Examples) {
  const double h2 = gen_harmonic(HarmonicKind::H, 10, 2, P).value;
  const double h3 = gen_harmonic(HarmonicKind::H, 10, 3, P).value;
  EXPECT_NEAR(em_tail(power_log_term(2, 0), 10, 4).value, pi * pi / 6 - h2, 1e-12);
  EXPECT_NEAR(em_tail(power_log_term(3, 0), 10, 4).value, kFrozenZeta3 - h3, 1e-12);
  EXPECT_EQ(em_tail(power_log_term(3, 0, 0.0), 10, 4).value, 0.0);
}

TEST(BooleTail, AlternatingZetaTail) {
  // sum_{k>N} (-1)^k / k^2 = -(eta(2) - sum_{k<=N} (-1)^{k-1}/k^2)
  const double eta2 = pi * pi / 12;
  for (long N : {10L, 20L}) {
    for (int order : {2, 4, 6}) {
      const double want = -(eta2 - gen_harmonic(HarmonicKind::H, N, 2, M).value);
      const auto t = boole_tail(power_log_term(2, 0), N, order);
      EXPECT_LE(std::abs(t.value - want), t.err + 1e-16) << N << " " << order;
    }
  }
  EXPECT_NEAR(boole_tail(power_log_term(2, 0), 20, 4).value, -(eta2 - gen_harmonic(HarmonicKind::H, 20, 2, M).value), 1e-14);
}

TEST(SumEuler, Examples) {
  const Family eh(FamilyTag::EULER_H);
  EXPECT_NEAR(sum_euler(eh, {1, 2, 1, P, P}).value, 2 * kFrozenZeta3, 1e-9);
  EXPECT_NEAR(sum_euler(eh, {1, 2, 1, M, P}).value, -5.0 / 8.0 * kFrozenZeta3, 1e-9);
  const Family eo(FamilyTag::EULER_O);
  const Params x{1, 2, 1, M, P};
  EXPECT_LE(rel(sum_euler(eo, x).value, closedform::eval_theorem(eo, x).value), 1e-8);
  EXPECT_THROW(sum_euler(eh, {1, 2, 2, P, P}), closedform::ValidationError);
  EXPECT_THROW(sum_euler(Family(FamilyTag::BBP_H), {1, 2, 1, P, P}), ParameterError);
}

TEST(SumBbp, Examples) {
  EXPECT_NEAR(sum_bbp(Family(FamilyTag::BBP_O), {1, 1, 1, M, P}).value, kFrozenBatir, 1e-9);
  for (const Params& x : {Params{2, 1, 1, M, P}, Params{1, 2, 1, M, P}, Params{2, 3, 3, P, M}}) {
    const Family f(FamilyTag::BBP_H);
    EXPECT_LE(rel(sum_bbp(f, x).value, closedform::eval_theorem(f, x).value), 1e-8);
  }
}

// Plain partial sums with an averaged last term against CVZ, on every
// alternating sum case with q >= 2.
TEST(SumEuler, AccelerationCrossValidation) {
  int checked = 0;
  for (FamilyTag t : {FamilyTag::EULER_H, FamilyTag::EULER_O, FamilyTag::BBP_H, FamilyTag::BBP_O}) {
    for (int p = 1; p < 7; ++p) {
      for (int q = 2; p + q <= 7; ++q) {
        for (int n = 1; n <= 3; ++n) {
          for (Sign b : {P, M}) {
            const Family f(t);
            const Params x{p, q, n, M, b};
            if (!closedform::validate_params(f, x).ok) continue;
            const auto cvz = evaluate(f, x, {}, SumConfig{200000, Accel::ALT_CVZ, 6});
            const auto plain = evaluate(f, x, {}, SumConfig{200000, Accel::NONE, 6});
            EXPECT_LE(std::abs(cvz.value - plain.value), cvz.err + plain.err) << closedform::to_string(t) << p << q << n;
            ++checked;
          }
        }
      }
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(HarmonicGeneratingFunction, TruncationBound) {
  constexpr int K = 200;
  for (double x : {0.5, -0.5, 0.25, -0.25}) {
    for (int p = 1; p <= 4; ++p) {
      for (Sign b : {P, M}) {
        double sum = 0;
        for (int k = K; k >= 1; --k) sum += gen_harmonic(HarmonicKind::H, k, p, b).value * std::pow(x, k);
        const double want = b.as_double() * specfun::polylog(p, b.as_double() * x).value / (1 - x);
        const double rounding = 8 * std::numeric_limits<double>::epsilon() * std::abs(want);
        EXPECT_LE(std::abs(sum - want), 2 * std::pow(std::abs(x), K + 1) / (1 - std::abs(x)) + rounding);
      }
    }
  }
}

TEST(Evaluate, MatchesFrozenReferenceValues) {
  for (const auto& f : kFrozenLattice) {
    const auto tag = closedform::parse_family(f.family);
    const Family fam = closedform::has_variants(tag) ? Family(tag, closedform::parse_variant(f.variant)) : Family(tag);
    const auto v = evaluate(fam, {f.p, f.q, f.n, Sign(f.a), Sign(f.b)});
    EXPECT_LE(rel(v.value, f.value), 1e-9) << f.family << " " << f.variant << " " << f.p << f.q << f.n << f.a << f.b;
  }
}
