#include <benchmark/benchmark.h>

#include "stickelberger/conductor.hpp"
#include "stickelberger/jacobi.hpp"
#include "stickelberger/stickelberger.hpp"

using namespace stk;

static void BM_ShortBasis(benchmark::State& state) {
  Conductor c = parse_conductor(state.range(0));
  for (auto _ : state) {
    NamedBasis b = short_basis(c);
    benchmark::DoNotOptimize(b.elements.data());
  }
}
BENCHMARK(BM_ShortBasis)->Arg(105)->Arg(331)->Arg(1155)
    ->Unit(benchmark::kMillisecond);

static void BM_TransitionDet(benchmark::State& state) {
  Conductor c = parse_conductor(state.range(0));
  NamedBasis from = basis_for(c, BasisLabel::Theta);
  NamedBasis to = basis_for(c, BasisLabel::Short);
  for (auto _ : state) {
    mpq_class d = transition_determinant(from, to);
    benchmark::DoNotOptimize(d.get_mpq_t());
  }
}
BENCHMARK(BM_TransitionDet)->Arg(35)->Arg(69)->Arg(105)
    ->Unit(benchmark::kMillisecond);

static void BM_ResidueField(benchmark::State& state) {
  for (auto _ : state) {
    ResidueField F = residue_field(31, 2);  // f == 5, q == 32
    benchmark::DoNotOptimize(F.chi_k.data());
  }
}
BENCHMARK(BM_ResidueField)->Unit(benchmark::kMicrosecond);

static void BM_JacobiSum(benchmark::State& state) {
  ResidueField F = residue_field(state.range(0), 2);
  for (auto _ : state) {
    CyclotomicInteger j = jacobi_sum(F, 1, 1);
    benchmark::DoNotOptimize(j.coeffs().data());
  }
}
BENCHMARK(BM_JacobiSum)->Arg(5)->Arg(31)->Arg(45)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
