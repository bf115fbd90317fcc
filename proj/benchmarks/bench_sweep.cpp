#include <benchmark/benchmark.h>

#include "collspec/presets.hpp"
#include "collspec/response.hpp"

using namespace collspec;

// Full sweep of one fig7 curve (Voigt closed form at every grid point).
static void BM_sweep_fig7_member(benchmark::State& state) {
    ScenarioConfig cfg = paper_preset("fig7").members[1].config;
    cfg.grid.steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(cfg, 1));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_sweep_fig7_member)->Arg(201)->Arg(2001);

// Discretized-ensemble sweep: cost scales with modes x grid points.
static void BM_sweep_discretized(benchmark::State& state) {
    DistributionSpec dist;
    dist.kind = DistributionSpec::Kind::gaussian_isomer;
    dist.mean = 0.0;
    dist.sigma = 3.5;
    dist.points = static_cast<int>(state.range(0));

    ScenarioConfig cfg;
    cfg.coupling = {5.0, 5.0};
    cfg.model = discretize_distribution(dist);
    cfg.grid = {-40.0, 40.0, 801};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep(cfg, 1));
    }
}
BENCHMARK(BM_sweep_discretized)->Arg(16)->Arg(64)->Arg(256);
