#include <roughheston/roughheston.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace roughheston;

namespace {

const ModelParams ref = ModelParams::reference();

void bm_mittag_leffler(benchmark::State& state) {
    // one argument from each evaluation branch
    const double xs[] = {2.5, -0.5, -3.0, -30.0, -200.0};
    for (auto _ : state)
        for (double x : xs) benchmark::DoNotOptimize(mittag_leffler(0.6, 0.6, x));
}
BENCHMARK(bm_mittag_leffler);

void bm_t1_star(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(t1_star(ref, -20.0));
        benchmark::DoNotOptimize(t1_star(ref, 60.0));
    }
}
BENCHMARK(bm_t1_star);

// O(n^2) in the number of steps, so the horizon sets the cost
void bm_solve_psi(benchmark::State& state) {
    SolverConfig cfg;
    cfg.step = 1e-3;
    cfg.horizon = static_cast<double>(state.range(0)) * cfg.step;
    const Kernel k = Kernel::power_law(0.6);
    for (auto _ : state) benchmark::DoNotOptimize(solve_psi(k, ref, -5.0, cfg));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_solve_psi)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Arg(4000)->Complexity(benchmark::oNSquared);

void bm_explosion_estimate(benchmark::State& state) {
    SolverConfig cfg;
    cfg.step = 2e-3;
    cfg.horizon = 1.0;
    const Kernel k = Kernel::power_law(0.6);
    for (auto _ : state) benchmark::DoNotOptimize(estimate_explosion_time(k, ref, -20.0, cfg, 2.5e-4));
}
BENCHMARK(bm_explosion_estimate);

void bm_explosion_sweep(benchmark::State& state) {
    std::vector<double> grid;
    for (int i = 0; i <= 340; ++i) grid.push_back(-40.0 + 0.25 * i);
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(explosion_table(ref, grid, std::nullopt, threads));
}
BENCHMARK(bm_explosion_sweep)->Arg(1)->Arg(4);

void bm_aivs_sweep(benchmark::State& state) {
    std::vector<double> grid;
    const double top = threshold_T_crit_prime(ref);
    for (int i = 1; i <= 200; ++i) grid.push_back(top * i / 200.0);
    for (auto _ : state) benchmark::DoNotOptimize(aivs_table(ref, grid, 1));
}
BENCHMARK(bm_aivs_sweep);

}  // namespace

BENCHMARK_MAIN();
