#include <benchmark/benchmark.h>

#include <random>

#include "stickelberger/exact_linalg.hpp"

using namespace stk;

namespace {

IntMatrix random_matrix(long n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> dist(-1, 1);  // the +-1 regime used here
  IntMatrix m(n, n);
  for (auto& x : m.a) x = dist(rng);
  return m;
}

}  // namespace

static void BM_DetBareiss(benchmark::State& state) {
  IntMatrix m = random_matrix(state.range(0), 42);
  for (auto _ : state) {
    mpz_class d = det_bareiss(m);
    benchmark::DoNotOptimize(d.get_mpz_t());
  }
}
BENCHMARK(BM_DetBareiss)->Arg(32)->Arg(64)->Arg(128)
    ->Unit(benchmark::kMillisecond);

static void BM_Hnf(benchmark::State& state) {
  IntMatrix m = random_matrix(state.range(0), 43);
  for (auto _ : state) {
    IntMatrix h = hnf(m);
    benchmark::DoNotOptimize(h.a.data());
  }
}
BENCHMARK(BM_Hnf)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_LeftKernel(benchmark::State& state) {
  long n = state.range(0);
  IntMatrix m = random_matrix(n, 44);
  for (long j = 0; j < n; ++j) m.at(n - 1, j) = m.at(0, j);  // force rank loss
  for (auto _ : state) {
    IntMatrix k = left_kernel(m);
    benchmark::DoNotOptimize(k.a.data());
  }
}
BENCHMARK(BM_LeftKernel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
