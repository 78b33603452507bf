#include <benchmark/benchmark.h>

#include <sproots/corpus.hpp>
#include <sproots/gf2n.hpp>

namespace {

using namespace sproots;

void BM_Multiply(benchmark::State& state) {
  const FieldContext& ctx = FieldContext::get(static_cast<unsigned>(state.range(0)));
  CorpusRng rng(kDefaultSeed);
  FieldElement a = rng.nonzero_element(ctx);
  const FieldElement b = rng.nonzero_element(ctx);
  for (auto _ : state) {
    a *= b;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_Multiply)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Invert(benchmark::State& state) {
  const FieldContext& ctx = FieldContext::get(static_cast<unsigned>(state.range(0)));
  CorpusRng rng(kDefaultSeed);
  const FieldElement a = rng.nonzero_element(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(inv(a));
}
BENCHMARK(BM_Invert)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_PowBig(benchmark::State& state) {
  const FieldContext& ctx = FieldContext::get(static_cast<unsigned>(state.range(0)));
  CorpusRng rng(kDefaultSeed);
  const FieldElement a = rng.nonzero_element(ctx);
  const BigUint e = (BigUint(1) << 200) + 12345;
  for (auto _ : state) benchmark::DoNotOptimize(pow(a, e));
}
BENCHMARK(BM_PowBig)->Arg(16)->Arg(64);

}  // namespace
