// Serial vs OpenMP for the three data-parallel kernels.

#include <benchmark/benchmark.h>

#include "unipat/census.hpp"
#include "unipat/oracle.hpp"
#include "unipat/walk.hpp"

namespace {

using namespace unipat;

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void BM_Census3(benchmark::State& state) {
  const Exec exec = exec_of(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_census({}, exec));
  }
}
BENCHMARK(BM_Census3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Census4Sample(benchmark::State& state) {
  const Exec exec = exec_of(state);
  CensusOptions options;
  options.n = 4;
  options.sample = 2000;
  options.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_census(options, exec));
  }
}
BENCHMARK(BM_Census4Sample)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// The tolerance is out of reach, so every restart runs to max_iters.
void BM_DecideAllRestarts(benchmark::State& state) {
  const Exec exec = exec_of(state);
  const Pattern p = Pattern::from_rows({"1101", "1110", "0111", "1011"});
  OracleParams params;
  params.restarts = 16;
  params.max_iters = 200;
  params.unitary_tol = 1e-18;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decide(p, params, exec));
  }
}
BENCHMARK(BM_DecideAllRestarts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Transition(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(1));
  const ComplexMatrix u = random_unitary(n, 3);
  const ComplexVector in = random_unitary(n, 4).col(0);
  ComplexVector out(static_cast<Eigen::Index>(n));
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    if (parallel) {
      kernels::transition_parallel(u, in, out);
    } else {
      kernels::transition_serial(u, in, out);
    }
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Transition)->ArgsProduct({{0, 1}, {64, 256, 1024}});

}  // namespace

BENCHMARK_MAIN();
