#include <benchmark/benchmark.h>

#include <complex>

#include "adia/amplitude.hpp"
#include "adia/gaussian.hpp"
#include "adia/oracle.hpp"
#include "adia/riccati.hpp"
#include "adia/scenario.hpp"
#include "adia/specfun.hpp"

namespace {

using cplx = std::complex<double>;

void BM_BesselSeries(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adia::specfun::bessel_j(0.25, x));
    }
}
BENCHMARK(BM_BesselSeries)->Arg(1)->Arg(10)->Arg(19)->Unit(benchmark::kNanosecond);

void BM_BesselAsymptotic(benchmark::State& state) {
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adia::specfun::bessel_j(0.25, x));
    }
}
BENCHMARK(BM_BesselAsymptotic)->Arg(25)->Arg(100)->Arg(500)->Unit(benchmark::kNanosecond);

void BM_RiccatiWidth(benchmark::State& state) {
    const adia::RiccatiFamily fam(0.1, adia::Kappa(adia::solve_kappa(0.1)));
    const double t = 0.1 * static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adia::riccati_width(fam, t));
    }
}
BENCHMARK(BM_RiccatiWidth)->Arg(5)->Arg(50)->Arg(95)->Unit(benchmark::kNanosecond);

void BM_MatchedAmplitudeBuild(benchmark::State& state) {
    const double eps = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adia::AmplitudeSolution::matched(eps));
    }
}
BENCHMARK(BM_MatchedAmplitudeBuild)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ScenarioTouch(benchmark::State& state) {
    const double eps = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(adia::run_scenario({.epsilon = eps}));
    }
}
BENCHMARK(BM_ScenarioTouch)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_OdeOracle(benchmark::State& state) {
    const double eps = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(adia::oracle::integrate_riccati_linear(
            eps, -1.0 / eps, cplx(1.0, 0.0), 1.0 / eps, 1e-10));
    }
}
BENCHMARK(BM_OdeOracle)->Unit(benchmark::kMillisecond);

void BM_PdeStep(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto grid = adia::oracle::sample_gaussian(adia::ground_state(), -30.0, 30.0, n, 0.0);
    for (auto _ : state) {
        adia::oracle::evolve_grid(
            grid, [](double, double x) { return 0.005 * x * x; }, grid.time,
            grid.time + 0.1, 1e-3);
        benchmark::DoNotOptimize(grid.values.data());
    }
    state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_PdeStep)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
