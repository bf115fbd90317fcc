#include <benchmark/benchmark.h>

#include "collspec/faddeeva.hpp"

using namespace collspec;

// Kernel cost across the algorithm regions (series, shifted recurrence,
// plain continued fraction).
static void BM_wofz(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    const Complex z{x, 0.07};
    for (auto _ : state) {
        benchmark::DoNotOptimize(wofz(z));
    }
}
BENCHMARK(BM_wofz)->Arg(0)->Arg(3)->Arg(8)->Arg(40)->Arg(400);

static void BM_voigt_average(benchmark::State& state) {
    double omega = -30.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(gaussian_lorentzian_average(omega, 0.0, 10.0, 1.0));
        omega += 1e-3;
        if (omega > 30.0) omega = -30.0;
    }
}
BENCHMARK(BM_voigt_average);
