#include <benchmark/benchmark.h>

#include "polyquant/circle_constrained.hpp"
#include "polyquant/diagonal_constrained.hpp"
#include "polyquant/oracle.hpp"
#include "polyquant/unconstrained.hpp"

namespace {

using namespace polyquant;

void BM_ExactDistortion(benchmark::State& state) {
    auto n = static_cast<int>(state.range(0));
    RegularPolygon hexagon = make_polygon(6);
    QuantizerSet set = optimal_set(6, n).set;
    auto support = polygon_support(hexagon);
    for (auto _ : state) {
        double total = distortion(support, set).total;
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ExactDistortion)->Arg(7)->Arg(13)->Arg(25);

void BM_SampledDistortion(benchmark::State& state) {
    RegularPolygon hexagon = make_polygon(6);
    QuantizerSet set = optimal_set(6, 13).set;
    auto support = polygon_support(hexagon);
    auto samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        double total = sampled_distortion(support, set, samples);
        benchmark::DoNotOptimize(total);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampledDistortion)->RangeMultiplier(4)->Range(1000, 64000)->Complexity();

void BM_CircumcircleGroupSolve(benchmark::State& state) {
    auto ell = static_cast<int>(state.range(0));
    for (auto _ : state) {
        ArcGroupSolution sol = circumcircle_group_solve(6, ell);
        benchmark::DoNotOptimize(sol.group_distortion);
    }
}
BENCHMARK(BM_CircumcircleGroupSolve)->Arg(3)->Arg(4)->Arg(6);

void BM_TriangleQSolve(benchmark::State& state) {
    auto m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        TriangleQSolution sol = triangle_q_solve(m);
        benchmark::DoNotOptimize(sol.value);
    }
}
BENCHMARK(BM_TriangleQSolve)->Arg(6)->Arg(9);

void BM_OracleGlobalMinimize(benchmark::State& state) {
    RegularPolygon hexagon = make_polygon(6);
    OracleConfig config;
    config.restarts = 4;
    auto free_count = static_cast<int>(state.range(0));
    for (auto _ : state) {
        OracleMinimum best =
            global_minimize(Constraint::Circumcircle, free_count, hexagon, config);
        benchmark::DoNotOptimize(best.value);
    }
}
BENCHMARK(BM_OracleGlobalMinimize)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
