#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "wsnfire/geometry.hpp"
#include "wsnfire/montecarlo.hpp"

using namespace wsnfire;

static void BM_EllipseReachTime(benchmark::State& state) {
    const EllipseReachSolver solve({1.0, 3.0, 2.0, 0.6});
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    std::vector<Point> pts(1024);
    for (Point& p : pts) p = {u(rng), u(rng)};
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve({0.0, 0.0}, pts[i++ & 1023]));
    }
}
BENCHMARK(BM_EllipseReachTime);

static void BM_BurnedUnionArea(benchmark::State& state) {
    const RectRegion region(10.0, 10.0);
    const EllipseShape shape{1.0, 2.0, 2.0, 0.3};
    std::vector<Front> fronts;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int k = 0; k < state.range(0); ++k) fronts.push_back({{u(rng), u(rng)}, shape, 2.0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(burned_union_area(fronts, region));
    }
}
BENCHMARK(BM_BurnedUnionArea)->Arg(1)->Arg(3)->Arg(10);

static void BM_RunTrials(benchmark::State& state) {
    ScenarioConfig cfg;
    const auto n = static_cast<std::size_t>(state.range(0));
    const double side = std::sqrt(static_cast<double>(n));
    cfg.region = RectRegion(side, side);
    cfg.placement = RandomPlacement{n};
    cfg.trials = 1000;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials(cfg, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(cfg.trials));
}
BENCHMARK(BM_RunTrials)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
