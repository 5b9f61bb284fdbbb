#include <benchmark/benchmark.h>

#include "abkm/analysis.hpp"
#include "abkm/dynamics.hpp"
#include "abkm/numeric.hpp"

namespace {

void BM_IntegrateMirrored(benchmark::State& state) {
  const abkm::ModelParams params(-0.5, 0.3);
  const auto p1 = abkm::Trajectory::path1(1.0);
  const std::vector<abkm::Trajectory> paths{p1, abkm::Trajectory::mirror_of(p1)};
  abkm::IntegratorConfig cfg;
  cfg.dt = 1e-4;
  cfg.t_end = abkm::kPi - 1e-3;
  cfg.record_every = 1000;
  const auto init = abkm::initial_state(paths);
  for (auto _ : state) {
    auto series = abkm::integrate(abkm::Model::mirrored, params, init, paths, cfg);
    benchmark::DoNotOptimize(series);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cfg.t_end / cfg.dt));
}
BENCHMARK(BM_IntegrateMirrored)->Unit(benchmark::kMillisecond);

void BM_ProfileSweep(benchmark::State& state) {
  const auto grid = abkm::to_radians(abkm::degree_grid(0.0, 179.0, 1.0));
  const auto rks = abkm::default_profile_rk_values();
  for (auto _ : state) {
    auto sweep = abkm::profile_sweep(-0.5, rks, grid);
    benchmark::DoNotOptimize(sweep);
  }
}
BENCHMARK(BM_ProfileSweep);

void BM_CriticalRkScan(benchmark::State& state) {
  const int panels = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(abkm::critical_rk_scan(-1.0 / 3.0, 0.0, 2.0, 1e-10, panels));
  }
}
BENCHMARK(BM_CriticalRkScan)->Arg(2048)->Arg(4096)->Arg(16384)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
