#include <benchmark/benchmark.h>

#include <sproots/coord_funcs.hpp>
#include <sproots/corpus.hpp>
#include <sproots/oracles.hpp>
#include <sproots/reduction.hpp>

namespace {

using namespace sproots;

void BM_CoordinatePoly(benchmark::State& state) {
  const FieldContext& ctx = FieldContext::get(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coordinate_poly(ctx, 1));
}
BENCHMARK(BM_CoordinatePoly)->Arg(8)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMicrosecond);

void BM_Reduce(benchmark::State& state) {
  const auto v = static_cast<unsigned>(state.range(0));
  CorpusRng rng(kDefaultSeed);
  const Cnf cnf = random_3cnf(rng, v, v);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(cnf));
}
BENCHMARK(BM_Reduce)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_CountRoots(benchmark::State& state) {
  const auto v = static_cast<unsigned>(state.range(0));
  CorpusRng rng(kDefaultSeed);
  const ReductionOutput out = reduce(random_3cnf(rng, v, v));
  for (auto _ : state) benchmark::DoNotOptimize(count_roots_bruteforce(out.poly));
}
BENCHMARK(BM_CountRoots)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
