#include <benchmark/benchmark.h>

#include <numbers>

#include "exlat/damping.hpp"
#include "exlat/oracle.hpp"
#include "exlat/sweep.hpp"

namespace {

const exlat::PhysicalConstants consts;
const exlat::LatticeConfig cfg{1000.0, 100, 100, 1.0, 0.0};
const exlat::DipoleOrientation dip{1.0, std::numbers::pi / 4.0, 0.0};

void BM_GammaExciton(benchmark::State& state) {
    double e0 = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(exlat::gamma_exciton(consts, cfg, dip, 1.0, e0));
        e0 = e0 < 0.9 ? e0 + 1e-6 : 0.3;
    }
}
BENCHMARK(BM_GammaExciton);

void BM_CriticalK(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(exlat::critical_k(consts, cfg));
}
BENCHMARK(BM_CriticalK);

void BM_GoldenRuleRate(benchmark::State& state) {
    auto settings = exlat::OracleSettings::defaults(consts, 1.0);
    settings.n_points = static_cast<int>(state.range(0));
    exlat::CouplingModel model{dip, cfg, 1.0, 0.5 / consts.hbar_c};
    for (auto _ : state)
        benchmark::DoNotOptimize(exlat::golden_rule_rate(consts, model, settings));
}
BENCHMARK(BM_GoldenRuleRate)->Arg(20000)->Arg(200000);

void BM_FigureSweep(benchmark::State& state) {
    auto spec = exlat::figure_spec("3a");
    for (auto _ : state)
        benchmark::DoNotOptimize(exlat::run_sweep(consts, spec, cfg, dip));
}
BENCHMARK(BM_FigureSweep);

} // namespace

BENCHMARK_MAIN();
