#include <phasesteg/dft.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <vector>

namespace {

std::vector<double> ramp(std::size_t n)
{
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = std::sin(0.37 * static_cast<double>(i)) * 1000.0;
    }
    return v;
}

void BM_Forward(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const phasesteg::FftPlan plan(n);
    const auto input = ramp(n);
    std::vector<std::complex<double>> buf(n);
    for (auto _ : state) {
        for (std::size_t i = 0; i < n; ++i) {
            buf[i] = input[i];
        }
        plan.forward(buf);
        benchmark::DoNotOptimize(buf.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Forward)->RangeMultiplier(4)->Range(4, 4096);

// analyze + synthesize, the per-segment cost of embedding
void BM_PolarRoundTrip(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const phasesteg::FftPlan plan(n);
    const auto input = ramp(n);
    for (auto _ : state) {
        auto out = plan.synthesize(plan.analyze(input));
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_PolarRoundTrip)->RangeMultiplier(4)->Range(4, 4096);

void BM_PlanConstruction(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        phasesteg::FftPlan plan(n);
        benchmark::DoNotOptimize(&plan);
    }
}
BENCHMARK(BM_PlanConstruction)->RangeMultiplier(16)->Range(16, 4096);

} // namespace

BENCHMARK_MAIN();
