#include <benchmark/benchmark.h>

#include "entconvex/angular.hpp"
#include "entconvex/criterion.hpp"
#include "entconvex/sweep.hpp"
#include "entconvex/tables.hpp"

using namespace entconvex;

static void BM_ClebschGordan(benchmark::State& st) {
  const int l = static_cast<int>(st.range(0));
  for (auto _ : st)
    for (int m1 = -l; m1 <= l; ++m1) benchmark::DoNotOptimize(clebsch_gordan(l, m1, l, -m1, l, 0));
}
BENCHMARK(BM_ClebschGordan)->Arg(3)->Arg(12)->Arg(30);

static void BM_ExactDensity(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(coupled_reduced_density_exact(3, 2, 2, -2, true));
}
BENCHMARK(BM_ExactDensity);

static HermitianMatrix angular_rho(int l, double alpha) {
  return coupled_reduced_density(l, l, l, -l, alpha);
}

static void BM_Eigendecompose(benchmark::State& st) {
  const auto rho = angular_rho(static_cast<int>(st.range(0)), 0.3);
  for (auto _ : st) benchmark::DoNotOptimize(eigendecompose(rho));
}
BENCHMARK(BM_Eigendecompose)->Arg(3)->Arg(8)->Arg(12);

static void BM_EntropyEigenvaluesOnly(benchmark::State& st) {
  const auto rho = angular_rho(static_cast<int>(st.range(0)), 0.3);
  for (auto _ : st) benchmark::DoNotOptimize(von_neumann_entropy(rho));
}
BENCHMARK(BM_EntropyEigenvaluesOnly)->Arg(3)->Arg(8)->Arg(12);

static void BM_Criterion(benchmark::State& st) {
  const int l = static_cast<int>(st.range(0));
  const auto r0 = angular_rho(l, 1.0), r1 = angular_rho(l, 0.0);
  for (auto _ : st) benchmark::DoNotOptimize(evaluate_criterion(r0, r1));
}
BENCHMARK(BM_Criterion)->Arg(3)->Arg(8);

static void BM_Probe(benchmark::State& st) {
  const auto r0 = angular_rho(3, 1.0), r1 = angular_rho(3, 0.0);
  ProbeOptions opt;
  opt.samples = 1000;
  opt.threads = 1;
  for (auto _ : st) benchmark::DoNotOptimize(random_projector_probe(r0, r1, opt));
}
BENCHMARK(BM_Probe)->Unit(benchmark::kMillisecond);

static void BM_Table(benchmark::State& st) {
  const int id = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(compute_table(id));
}
BENCHMARK(BM_Table)->Arg(5)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
