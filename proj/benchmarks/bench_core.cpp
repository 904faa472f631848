#include <benchmark/benchmark.h>

#include "mxa/decomp.hpp"
#include "mxa/eig.hpp"
#include "mxa/generators.hpp"
#include "mxa/numrange.hpp"
#include "mxa/theorems.hpp"

namespace {

using namespace mxa;

void BM_HermitianEig(benchmark::State& state) {
  Rng rng(1);
  const std::size_t n = state.range(0);
  Matrix h = gen::hermitian(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(h));
}
BENCHMARK(BM_HermitianEig)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_Svd(benchmark::State& state) {
  Rng rng(2);
  const std::size_t n = state.range(0);
  Matrix m = gen::ginibre(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(svd(m));
}
BENCHMARK(BM_Svd)->Arg(8)->Arg(16)->Arg(32);

void BM_SplitPositive2x2(benchmark::State& state) {
  Rng rng(3);
  const std::size_t n = state.range(0);
  Matrix h = gen::psd(rng, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(split_positive_2x2(h, n));
}
BENCHMARK(BM_SplitPositive2x2)->Arg(4)->Arg(8)->Arg(16);

void BM_Pythagoras(benchmark::State& state) {
  Rng rng(4);
  const std::size_t n = state.range(0);
  PartitionedMatrix pa;
  pa.base = gen::ginibre(rng, n, n);
  pa.blocks = {{0, n, 0, 1}, {0, 1, 1, n}, {1, n, 1, n}};
  for (auto _ : state) benchmark::DoNotOptimize(pythagoras(pa));
}
BENCHMARK(BM_Pythagoras)->Arg(3)->Arg(8)->Arg(16);

void BM_Clifford(benchmark::State& state) {
  Rng rng(5);
  const std::size_t beta = state.range(0);
  const std::size_t n = state.range(1);
  Matrix h = gen::psd_hermitian_blocks(rng, beta, n);
  for (auto _ : state) benchmark::DoNotOptimize(clifford_partial_trace(h, beta));
}
BENCHMARK(BM_Clifford)->Args({2, 2})->Args({2, 4})->Args({4, 1})->Args({4, 3});

void BM_SupportProfile(benchmark::State& state) {
  Rng rng(6);
  Matrix x = gen::ginibre(rng, state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(support_profile(x, 720));
}
BENCHMARK(BM_SupportProfile)->Arg(4)->Arg(8);

void BM_CheckerTrial(benchmark::State& state) {
  TrialConfig cfg;
  cfg.trials = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rerun_trial("ARAKI_CONTRACT", cfg, state.iterations()));
  }
}
BENCHMARK(BM_CheckerTrial);

}  // namespace

BENCHMARK_MAIN();
