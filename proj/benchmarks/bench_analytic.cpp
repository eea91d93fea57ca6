#include <benchmark/benchmark.h>

#include <complex>

#include "hyperzeno/coefficients.hpp"
#include "hyperzeno/kernels.hpp"
#include "hyperzeno/photstat.hpp"
#include "hyperzeno/zeno.hpp"

using namespace hz;

namespace {

SystemParams params() {
    SystemParams p = figure2_params();
    p.lambda_probe = {0.4, 0.3};
    p.omega_probe = {0.2, 0.5};
    p.k = {0.31, -0.17, 0.43, 0.12, 0.91, 0.26, 1.37};
    return p;
}

void BM_K2(benchmark::State& state) {
    double d = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel::k2(d, 0.7, 1.1));
        d += 1e-9;
    }
}
BENCHMARK(BM_K2);

void BM_K2Series(benchmark::State& state) {
    double d = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel::k2(d, -2e-6, 1.1));
        d += 1e-15;
    }
}
BENCHMARK(BM_K2Series);

void BM_Coefficients(benchmark::State& state) {
    const SystemParams p = params();
    for (auto _ : state) benchmark::DoNotOptimize(coefficients(p, 0.1));
}
BENCHMARK(BM_Coefficients);

void BM_ZenoCase1(benchmark::State& state) {
    const SystemParams p = params();
    for (auto _ : state) benchmark::DoNotOptimize(zeno_case1(p, 0.1));
}
BENCHMARK(BM_ZenoCase1);

void BM_ZenoGeneral(benchmark::State& state) {
    const SystemParams p = params();
    for (auto _ : state) benchmark::DoNotOptimize(zeno_general(p, 0.1));
}
BENCHMARK(BM_ZenoGeneral);

void BM_ClosedStats(benchmark::State& state) {
    const SystemParams p = params();
    for (auto _ : state) benchmark::DoNotOptimize(d_closed_form(p, 0.1));
}
BENCHMARK(BM_ClosedStats);

void BM_ExpansionStats(benchmark::State& state) {
    const SystemParams p = params();
    for (auto _ : state) benchmark::DoNotOptimize(d_expansion(p, 0.1));
}
BENCHMARK(BM_ExpansionStats);

}  // namespace
