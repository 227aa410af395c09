#include <benchmark/benchmark.h>

#include "stickelberger/class_number.hpp"
#include "stickelberger/conductor.hpp"
#include "stickelberger/dirichlet.hpp"

using namespace stk;

static void BM_HMinusDet(benchmark::State& state) {
  Conductor c = parse_conductor(state.range(0));
  for (auto _ : state) {
    ClassNumberReport rep = h_minus_det(c);
    benchmark::DoNotOptimize(rep.h);
  }
}
BENCHMARK(BM_HMinusDet)->Arg(23)->Arg(67)->Arg(163)->Arg(331)
    ->Unit(benchmark::kMillisecond);

static void BM_HMinusAnalytic(benchmark::State& state) {
  Conductor c = parse_conductor(state.range(0));
  for (auto _ : state) {
    mpz_class h = h_minus_analytic(c);
    benchmark::DoNotOptimize(h.get_mpz_t());
  }
}
BENCHMARK(BM_HMinusAnalytic)->Arg(23)->Arg(67)->Arg(163)->Arg(331)
    ->Unit(benchmark::kMillisecond);

static void BM_CoefficientMatrix(benchmark::State& state) {
  Conductor c = parse_conductor(state.range(0));
  for (auto _ : state) {
    CoefficientMatrix cm = coefficient_matrix(c);
    benchmark::DoNotOptimize(cm.A.a.data());
  }
}
BENCHMARK(BM_CoefficientMatrix)->Arg(163)->Arg(331)->Arg(1009)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
