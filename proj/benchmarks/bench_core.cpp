#include <benchmark/benchmark.h>

#include <random>

#include "tars/bases.hpp"
#include "tars/canon.hpp"
#include "tars/oracle.hpp"
#include "tars/rootsys.hpp"

using namespace tars;

namespace {

void BM_Enumerate(benchmark::State& state) {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate(sys, state.range(0)));
}
BENCHMARK(BM_Enumerate)->Arg(2)->Arg(6)->Arg(12);

void BM_IsBase(benchmark::State& state) {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 2, 2);
  std::mt19937_64 rng(1);
  const Base b = build_base(sys, random_params(sys, Form::B4, rng, 2));
  for (auto _ : state) benchmark::DoNotOptimize(is_base(b, state.range(0)));
}
BENCHMARK(BM_IsBase)->Arg(4)->Arg(8)->Arg(16);

void BM_MatchCanonical(benchmark::State& state) {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 2, 2);
  std::mt19937_64 rng(2);
  const Base b = build_base(sys, random_params(sys, Form::B3, rng, 2));
  for (auto _ : state) benchmark::DoNotOptimize(match_canonical(b));
}
BENCHMARK(BM_MatchCanonical);

void BM_Search(benchmark::State& state) {
  const SystemDescriptor systems[] = {SystemDescriptor::make(Family::AEvenOdd2, 1, 1),
                                      SystemDescriptor::make(Family::AOddOdd2, 2, 1),
                                      SystemDescriptor::make(Family::AEvenOdd2, 2, 1)};
  const auto& sys = systems[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(search_bases(sys));
}
BENCHMARK(BM_Search)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
