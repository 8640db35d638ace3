// Serial reference vs OpenMP kernels. Arg(0) = serial, Arg(1) = parallel.
#include "gie/kernels.hpp"
#include "gie/units.hpp"

#include <benchmark/benchmark.h>

namespace {

gie::Execution mode(const benchmark::State& state) {
    return state.range(0) == 0 ? gie::Execution::Serial : gie::Execution::Parallel;
}

const double kMs = gie::ev_to_inverse_meters(0.004);

void BM_PotentialSweep(benchmark::State& state) {
    const auto radii = gie::log_grid(1e-6, 1e-3, 100000);
    for (auto _ : state)
        benchmark::DoNotOptimize(gie::potential_sweep(radii, 1e-14, kMs, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(radii.size()));
}
BENCHMARK(BM_PotentialSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EntropySweep(benchmark::State& state) {
    const auto seps = gie::linear_grid(1.5e-4, 1e-3, 20000);
    const gie::ExperimentConfig base;
    for (auto _ : state)
        benchmark::DoNotOptimize(gie::entropy_sweep(seps, base, kMs, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(seps.size()));
}
BENCHMARK(BM_EntropySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_QuadratureAgreement(benchmark::State& state) {
    const auto radii = gie::log_grid(1e-6, 1e-2, 50);
    const auto model = gie::PotentialModel::idg(kMs);
    for (auto _ : state)
        benchmark::DoNotOptimize(gie::quadrature_agreement(radii, model, 1e-14, mode(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(radii.size()));
}
BENCHMARK(BM_QuadratureAgreement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MonteCarloSeparability(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(gie::monte_carlo_separability(2000, 42, mode(state)));
    state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_MonteCarloSeparability)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
