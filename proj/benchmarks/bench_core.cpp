#include <benchmark/benchmark.h>

#include <numbers>

#include "fekete/rng.hpp"
#include "fekete/verify.hpp"

using namespace fekete;

namespace {

constexpr double kPi = std::numbers::pi;

NormalizedSeries random_normalized(int order, std::uint64_t seed) {
  SplitMix64 rng(seed);
  TruncatedSeries s = TruncatedSeries::identity(order);
  for (int n = 2; n <= order; ++n) s.set(n, Complex(rng.next_in(-1, 1), rng.next_in(-1, 1)));
  return NormalizedSeries(std::move(s));
}

void BM_SeriesMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TruncatedSeries a = random_normalized(n, 1).series();
  const TruncatedSeries b = random_normalized(n, 2).series();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(a, b));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Compose(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const TruncatedSeries outer = random_normalized(n, 3).series();
  const TruncatedSeries inner = random_normalized(n, 4).series();
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(outer, inner));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Compose)->RangeMultiplier(2)->Range(8, 64)->Complexity();

void BM_Revert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const NormalizedSeries f = random_normalized(n, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(revert(f));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Revert)->RangeMultiplier(2)->Range(8, 32)->Complexity();

void BM_BuildMember(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  const SectorAlpha s(5 * kPi / 6);
  const HerglotzMeasure h = sample_measure(42, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(member_from_measure(s, h, order));
  }
}
BENCHMARK(BM_BuildMember)->Arg(12)->Arg(32)->Arg(64);

void BM_MembershipCheck(benchmark::State& state) {
  const SectorAlpha s(5 * kPi / 6);
  const NormalizedSeries f = member_from_measure(s, sample_measure(42, 11), 64);
  const MembershipGrid grid = MembershipGrid::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(membership_check(f, s, grid, 0.0));
  }
}
BENCHMARK(BM_MembershipCheck);

void BM_OracleScan(benchmark::State& state) {
  const OracleGrid grid{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_max_p_functional(0.3, grid));
  }
}
BENCHMARK(BM_OracleScan)->Arg(12)->Arg(24)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_VerifyOnSamples(benchmark::State& state) {
  const SectorAlpha s(2 * kPi / 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_on_samples(s, 2, 0.7, static_cast<int>(state.range(0)), 42));
  }
}
BENCHMARK(BM_VerifyOnSamples)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
