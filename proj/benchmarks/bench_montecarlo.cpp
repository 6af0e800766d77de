#include <benchmark/benchmark.h>

#include "ginprod/montecarlo.hpp"
#include "ginprod/rng.hpp"

using namespace ginprod;

static void BM_PhiloxBlock(benchmark::State& state) {
  Philox4x64::Counter ctr{0, 0, 0, 0};
  const Philox4x64::Key key{42, 0};
  for (auto _ : state) {
    ++ctr[0];
    benchmark::DoNotOptimize(Philox4x64::block(ctr, key));
  }
}
BENCHMARK(BM_PhiloxBlock);

static void BM_SampleGinibre(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::uint64_t sample = 0;
  for (auto _ : state) {
    RandomStream stream(1, sample++, 0);
    benchmark::DoNotOptimize(sample_ginibre(N, 1.0, stream));
  }
}
BENCHMARK(BM_SampleGinibre)->Arg(100)->Arg(500);

static void BM_EstimateWordMoment(benchmark::State& state) {
  MCConfig cfg;
  cfg.spec = EnsembleSpec::uniform(2);
  cfg.N = static_cast<int>(state.range(0));
  cfg.samples = 8;
  cfg.seed = 11;
  cfg.threads = 1;
  const Word w = Word::parse("xxdxdd");
  for (auto _ : state) benchmark::DoNotOptimize(estimate_word_moment(w, cfg));
}
BENCHMARK(BM_EstimateWordMoment)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_EigenvalueReport(benchmark::State& state) {
  MCConfig cfg;
  cfg.spec = EnsembleSpec::uniform(2);
  cfg.N = static_cast<int>(state.range(0));
  cfg.samples = 1;
  cfg.seed = 19;
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalue_radial_report(cfg));
}
BENCHMARK(BM_EigenvalueReport)->Arg(200)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
