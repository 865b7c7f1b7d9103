#include <benchmark/benchmark.h>

#include "lerchlab/closedform.hpp"
#include "lerchlab/oracle.hpp"
#include "lerchlab/specfun.hpp"

using namespace lerchlab;
using closedform::Family;
using closedform::FamilyTag;

static void BM_LerchPhi(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::lerch_phi(Sign::minus(), q, Rational(1, 3)));
}
BENCHMARK(BM_LerchPhi)->Arg(1)->Arg(2)->Arg(6);

static void BM_Polylog(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::polylog(3, 0.75));
}
BENCHMARK(BM_Polylog);

static void BM_PolylogReRecip(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::polylog_re_recip(4, Sign::plus(), 0.25));
}
BENCHMARK(BM_PolylogReRecip);

static void BM_EvalTheorem(benchmark::State& state) {
  const Family f(FamilyTag::INT_UNIT_1, closedform::Variant::ii);
  for (auto _ : state) benchmark::DoNotOptimize(closedform::eval_theorem(f, {2, 3, 2, Sign::minus(), Sign::plus()}));
}
BENCHMARK(BM_EvalTheorem);

static void BM_QuadUnit(benchmark::State& state) {
  const oracle::FamilyIntegral what{Family(FamilyTag::INT_UNIT_1), {2, 3, 2, Sign::minus(), Sign::plus()}};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::quad_unit(what));
}
BENCHMARK(BM_QuadUnit)->Unit(benchmark::kMicrosecond);

static void BM_SumEuler(benchmark::State& state) {
  const Family f(FamilyTag::EULER_H);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::sum_euler(f, {2, 3, 2, Sign::minus(), Sign::minus()}));
}
BENCHMARK(BM_SumEuler)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
