#include <benchmark/benchmark.h>

#include "ginprod/combinatorics.hpp"
#include "ginprod/moments.hpp"
#include "ginprod/wick.hpp"

using namespace ginprod;

static void BM_EnumeratePairings(benchmark::State& state) {
  const Word w = Word::xd_power(static_cast<int>(state.range(0)));
  const Diagram d(w);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_pairings(d));
}
BENCHMARK(BM_EnumeratePairings)->Arg(5)->Arg(6)->Arg(7);

static void BM_GinibreMomentPoly(benchmark::State& state) {
  const Word w = Word::xd_power(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ginibre_moment_poly(w));
}
BENCHMARK(BM_GinibreMomentPoly)->Arg(4)->Arg(6)->Arg(7);

static void BM_NoncrossingEnumeration(benchmark::State& state) {
  const Word w = Word::xd_power(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_noncrossing_pairings(w));
}
BENCHMARK(BM_NoncrossingEnumeration)->Arg(8)->Arg(10)->Arg(12);

static void BM_TcCoefficients(benchmark::State& state) {
  const Word w = Word::xd_power(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tc_coefficients(w));
}
BENCHMARK(BM_TcCoefficients)->Arg(6)->Arg(9);

static void BM_LargeNMomentFormula(benchmark::State& state) {
  const Word w = Word::xd_power(static_cast<int>(state.range(0)));
  const EnsembleSpec spec = EnsembleSpec::uniform(3);
  for (auto _ : state) benchmark::DoNotOptimize(large_n_moment(w, spec, 20));
}
BENCHMARK(BM_LargeNMomentFormula)->Arg(8)->Arg(12);

static void BM_Necklaces(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_necklaces(m));
}
BENCHMARK(BM_Necklaces)->Arg(6)->Arg(8);
