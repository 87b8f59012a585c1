// Serial reference vs OpenMP path for the parallel kernels.
//   ./sscs_bench --benchmark_filter=dl_matrix

#include <benchmark/benchmark.h>

#include "sscs/dl_distance.hpp"
#include "sscs/ensemble.hpp"
#include "sscs/rank_oracle.hpp"
#include "sscs/verify.hpp"

using namespace sscs;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_dl_matrix(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  Graph g = gen_ba(n, 3, 1);
  LeaderSet leaders(g, random_leaders(n, n / 4, 2));
  for (auto _ : state) benchmark::DoNotOptimize(dl_matrix(g, leaders, exec_of(state)));
  label(state);
}
BENCHMARK(BM_dl_matrix)->ArgsProduct({{0, 1}, {500, 2000}})->Unit(benchmark::kMillisecond);

void BM_gamma_samples(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  Graph g = gen_er(n, 0.2, 3);
  LeaderSet leaders(g, random_leaders(n, 3, 4));
  GammaOptions opts;
  opts.samples = 8;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(gamma_upper_estimate(g, leaders, opts));
  label(state);
}
BENCHMARK(BM_gamma_samples)->ArgsProduct({{0, 1}, {12, 40}})->Unit(benchmark::kMillisecond);

void BM_ensemble(benchmark::State& state) {
  EnsembleConfig cfg;
  cfg.families = {{Family::er, 0.05}, {Family::ba, 2}};
  cfg.n = 100;
  cfg.leader_counts = {2, 10, 40};
  cfg.instances_per_point = 10;
  cfg.mode = PmiMode::greedy;
  for (auto _ : state) benchmark::DoNotOptimize(run_ensemble(cfg, exec_of(state)));
  label(state);
}
BENCHMARK(BM_ensemble)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

void BM_exhaustive_suite(benchmark::State& state) {
  SuiteOptions opts;
  opts.max_n = 4;
  opts.directed_max_n = 3;
  opts.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(run_exhaustive_suite(opts));
  label(state);
}
BENCHMARK(BM_exhaustive_suite)->ArgsProduct({{0, 1}, {0}})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
