// Microbenchmarks for the hot paths: collision geometry, cost evaluation, and
// full optimizer iterations. Run with --benchmark_filter=... to narrow down.

#include <benchmark/benchmark.h>

#include <vector>

#include "uavtraj/baselines.hpp"
#include "uavtraj/geometry.hpp"
#include "uavtraj/hgo.hpp"
#include "uavtraj/objective.hpp"
#include "uavtraj/rng.hpp"
#include "uavtraj/scenario.hpp"

using namespace uavtraj;

namespace {

Scenario bench_scenario() { return builtin_scenario(ScenarioCase::complex, 1); }

std::vector<double> bench_vector(const Scenario& s, std::uint64_t seed) {
    const SearchSpace space = search_space(s);
    Rng rng(seed);
    return uniform_point(space, rng);
}

void BM_SegmentCirclePenetration(benchmark::State& state) {
    Rng rng(11);
    std::vector<Segment> segments;
    std::vector<CircleObstacle> circles;
    for (int i = 0; i < 1024; ++i) {
        segments.push_back({{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)},
                            {rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)}});
        circles.push_back({{rng.uniform(0.0, 10.0), rng.uniform(0.0, 10.0)},
                           rng.uniform(0.1, 2.0), 0.25});
    }
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(segment_circle_penetration(segments[i], circles[i]));
        i = (i + 1) & 1023;
    }
}
BENCHMARK(BM_SegmentCirclePenetration);

void BM_TrajectoryViolation(benchmark::State& state) {
    const Scenario s = bench_scenario();
    const Trajectory t = decode(bench_vector(s, 3), s);
    for (auto _ : state) {
        benchmark::DoNotOptimize(trajectory_violation(t, s.obstacles));
    }
}
BENCHMARK(BM_TrajectoryViolation);

void BM_Evaluate(benchmark::State& state) {
    const Scenario s = bench_scenario();
    const std::vector<double> v = bench_vector(s, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(v, s));
    }
}
BENCHMARK(BM_Evaluate);

// Cost of a whole optimizer run at protocol scale, per algorithm.
void BM_FullRun(benchmark::State& state, Algorithm algo) {
    const Scenario s = bench_scenario();
    const SearchSpace space = search_space(s);
    const Objective objective = make_objective(s);
    for (auto _ : state) {
        if (algo == Algorithm::hgo) {
            hgo::HgoConfig cfg;
            cfg.population = 100;
            cfg.iterations = 100;
            cfg.seed = 1;
            benchmark::DoNotOptimize(hgo::run(cfg, space, objective));
        } else {
            BaselineConfig cfg;
            cfg.algorithm = algo;
            cfg.population = 100;
            cfg.iterations = 100;
            cfg.seed = 1;
            benchmark::DoNotOptimize(run_baseline(cfg, space, objective));
        }
    }
}
BENCHMARK_CAPTURE(BM_FullRun, hgo, Algorithm::hgo)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FullRun, pso, Algorithm::pso)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FullRun, gwo, Algorithm::gwo)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FullRun, csa, Algorithm::csa)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_FullRun, bmo, Algorithm::bmo)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
