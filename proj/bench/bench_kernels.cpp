// Serial against OpenMP versions of the sweep kernels. Arg 0 is serial, 1 parallel.
#include <benchmark/benchmark.h>

#include "dwb/kernels.hpp"
#include "dwb/parcheck.hpp"

namespace {

dwb::Exec mode(const benchmark::State& st) {
  return st.range(0) == 0 ? dwb::Exec::serial : dwb::Exec::parallel;
}

void BM_HilbertSweep(benchmark::State& st) {
  for (auto _ : st) {
    auto r = dwb::hilbert_sweep(8, {2, 3, 5}, mode(st));
    benchmark::DoNotOptimize(r.cases);
  }
}
BENCHMARK(BM_HilbertSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExpGrid(benchmark::State& st) {
  for (auto _ : st) {
    auto r = dwb::exp_grid_sweep(8, 3, 512, 6, mode(st));
    benchmark::DoNotOptimize(r.cells);
  }
}
BENCHMARK(BM_ExpGrid)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ResultantTable(benchmark::State& st) {
  for (auto _ : st) {
    auto r = dwb::cyclotomic_resultant_table(30, mode(st));
    benchmark::DoNotOptimize(r.size());
  }
}
BENCHMARK(BM_ResultantTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ThetaRoundtrip(benchmark::State& st) {
  for (auto _ : st) {
    auto r = dwb::theta_roundtrip_failures(20000, mode(st));
    benchmark::DoNotOptimize(r.size());
  }
}
BENCHMARK(BM_ThetaRoundtrip)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FourSquares(benchmark::State& st) {
  for (auto _ : st) {
    auto r = dwb::four_squares_failures(20000, mode(st));
    benchmark::DoNotOptimize(r.size());
  }
}
BENCHMARK(BM_FourSquares)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FiveSquares(benchmark::State& st) {
  const dwb::Polynomial F = dwb::Polynomial::from_ints({5, 0, 2});
  for (auto _ : st) {
    auto r = dwb::five_squares_search(F, 3, mode(st));
    benchmark::DoNotOptimize(r.count);
  }
}
BENCHMARK(BM_FiveSquares)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
