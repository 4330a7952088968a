#include <benchmark/benchmark.h>

#include "puiseux/puiseux.hpp"

using namespace puiseux;

namespace {

TruncatedMonoid half_third_fifth() {
  return TruncatedMonoid::from_generators(
      {PosRational::parse("1/2"), PosRational::parse("1/3"), PosRational::parse("1/5")});
}

void BM_PrimeSeq(benchmark::State& state) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(prime_seq(PrimeFilter::all(), count));
}
BENCHMARK(BM_PrimeSeq)->Arg(1000)->Arg(10000);

void BM_Truncate(benchmark::State& state) {
  const auto spec = catalog("primarydense");
  const auto depth = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncate(spec, depth));
}
BENCHMARK(BM_Truncate)->Arg(8)->Arg(16)->Arg(32);

void BM_Factorizations(benchmark::State& state) {
  const auto tm = half_third_fifth();
  const PosRational x(static_cast<unsigned long>(state.range(0)));
  std::size_t count = 0;
  for (auto _ : state) {
    const auto zs = factorizations(tm, x);
    count = zs.size();
    benchmark::DoNotOptimize(zs);
  }
  state.counters["factorizations"] = static_cast<double>(count);
}
BENCHMARK(BM_Factorizations)->Arg(5)->Arg(20)->Arg(60);

void BM_FactorizationsWide(benchmark::State& state) {
  // Stage-2 bifurcus atoms: the lcm of the denominators exceeds 2^62.
  const auto sm = bifurcus_build(2, PosRational::parse("3/2"));
  const auto tm = sm.stage_monoid(2);
  const PosRational x = PosRational::parse("3/2");
  for (auto _ : state) benchmark::DoNotOptimize(factorizations(tm, x));
}
BENCHMARK(BM_FactorizationsWide);

void BM_ElementsUpTo(benchmark::State& state) {
  const auto tm = truncate(catalog("primarydense"), 6);
  const PosRational bound(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(elements_up_to(tm, bound));
}
BENCHMARK(BM_ElementsUpTo)->Arg(2)->Arg(5);

void BM_LengthExtremes(benchmark::State& state) {
  const auto tm = truncate(catalog("primarydense"), 8);
  const PosRational bound(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(length_extremes_up_to(tm, bound));
}
BENCHMARK(BM_LengthExtremes)->Arg(1)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ElasticitySet(benchmark::State& state) {
  const auto tm = truncate(catalog("infiniteunstable"), 5);
  const PosRational bound(static_cast<unsigned long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(elasticity_set(tm, bound));
}
BENCHMARK(BM_ElasticitySet)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BifurcusBuild(benchmark::State& state) {
  const auto stages = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bifurcus_build(stages, PosRational::parse("3/2")));
}
BENCHMARK(BM_BifurcusBuild)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DensityWitness(benchmark::State& state) {
  const auto a = SequenceDescriptor::parse("n*n");
  const auto b = SequenceDescriptor::parse("n");
  const PosRational eps = PosRational::parse("1/100");
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_witness(a, b, PosRational::parse("37/7"), eps));
  }
}
BENCHMARK(BM_DensityWitness);

}  // namespace

BENCHMARK_MAIN();
