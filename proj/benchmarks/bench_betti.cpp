#include <benchmark/benchmark.h>

#include <vector>

#include "arfbetti/arf.hpp"
#include "arfbetti/betti.hpp"
#include "arfbetti/homology.hpp"
#include "arfbetti/verify.hpp"

using namespace arfbetti;

namespace {

// <m, m+1, ..., 2m-1>: the largest embedding dimension for its multiplicity.
NumericalSemigroup ordinary(Element m) {
  std::vector<Element> gens;
  for (Element g = m; g < 2 * m; ++g) gens.push_back(g);
  return NumericalSemigroup::from_generators(gens);
}

void BM_GradedBettiOrdinary(benchmark::State& state) {
  const auto S = ordinary(static_cast<Element>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(S));
}
BENCHMARK(BM_GradedBettiOrdinary)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

void BM_GradedBettiRoute(benchmark::State& state) {
  const auto S = NumericalSemigroup::from_generators(std::vector<Element>{7, 9, 10, 11, 12, 13});
  BettiOptions options;
  options.route = state.range(0) == 0 ? HomologyRoute::Excision : HomologyRoute::Direct;
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(S, options));
}
BENCHMARK(BM_GradedBettiRoute)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_GradedBettiField(benchmark::State& state) {
  const auto S = ordinary(12);
  const auto field = state.range(0) == 0 ? FieldSpec{} : FieldSpec::prime(32749);
  for (auto _ : state) benchmark::DoNotOptimize(graded_betti(S, field));
}
BENCHMARK(BM_GradedBettiField)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateArf(benchmark::State& state) {
  const auto bound = static_cast<Element>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_arf(bound));
}
BENCHMARK(BM_EnumerateArf)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Sweep(benchmark::State& state) {
  SweepOptions options;
  options.bound = static_cast<Element>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(options));
}
BENCHMARK(BM_Sweep)->Arg(20)->Arg(26)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
