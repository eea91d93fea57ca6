#include <benchmark/benchmark.h>

#include "hyperzeno/fock_oracle.hpp"

using namespace hz;
using namespace hz::oracle;

namespace {

SystemParams small() {
    SystemParams p;
    p.g = 0.01;
    p.chi = 0.012;
    p.gamma_probe = {0.011, 0.009};
    p.k = {0.12, -0.08, 0.05, 0.10, 0.20, 0.03, -0.15};
    for (Mode m : kAllModes) p.a(m) = {0.5, 0.1 * static_cast<double>(idx(m))};
    return p;
}

FockConfig config(int n) {
    FockConfig c;
    c.dims = {n, n, n + 1, n + 1, n, n, n};
    return c;
}

void BM_Apply(benchmark::State& state) {
    const FockConfig cfg = config(static_cast<int>(state.range(0)));
    const FockOperator G = build_g(small(), cfg);
    const FockState psi = coherent_product_state(small(), cfg);
    std::vector<cplx> out(psi.amp.size());
    for (auto _ : state) {
        G.apply(psi.amp, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.basis_size()));
}
BENCHMARK(BM_Apply)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Evolve(benchmark::State& state) {
    const FockConfig cfg = config(static_cast<int>(state.range(0)));
    const FockOperator G = build_g(small(), cfg);
    const FockState psi = coherent_product_state(small(), cfg);
    for (auto _ : state) benchmark::DoNotOptimize(evolve(psi, G, 1.0));
}
BENCHMARK(BM_Evolve)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BuildG(benchmark::State& state) {
    const FockConfig cfg = config(5);
    for (auto _ : state) benchmark::DoNotOptimize(build_g(small(), cfg));
}
BENCHMARK(BM_BuildG)->Unit(benchmark::kMillisecond);

}  // namespace
