#include <benchmark/benchmark.h>

#include "collspec/distributions.hpp"
#include "collspec/dynamics.hpp"

using namespace collspec;

// RK4 stepping cost per mode count.
static void BM_integrate_eom(benchmark::State& state) {
    DistributionSpec dist;
    dist.kind = DistributionSpec::Kind::gaussian_magnetic;
    dist.mean = 17.0;
    dist.sigma = 3.5;
    dist.points = static_cast<int>(state.range(0));
    const EnsembleSpec ens = discretize_distribution(dist);
    const CollectiveCoupling coupling{0.0, 5.0};
    const double dt = suggest_dt(ens, coupling);

    DriveEnvelope kick;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_eom(ens, coupling, kick, 1.0, dt, 64));
    }
    state.SetItemsProcessed(state.iterations() *
                            static_cast<int64_t>(1.0 / dt) * 2 * state.range(0));
}
BENCHMARK(BM_integrate_eom)->Arg(4)->Arg(16)->Arg(64);
