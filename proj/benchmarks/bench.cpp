#include <benchmark/benchmark.h>

#include "bvsym/bvcalc.hpp"
#include "bvsym/generate.hpp"
#include "bvsym/symmetrize.hpp"
#include "bvsym/torsion.hpp"

using namespace bvsym;

static void BM_ProfileBuild(benchmark::State& state) {
    const auto u = generate_bv1d(1, 0, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto p = PiecewiseProfile::from(u);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ProfileBuild)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_Coarea(benchmark::State& state) {
    const auto u = generate_bv1d(1, 1, static_cast<std::size_t>(state.range(0)));
    const auto p = PiecewiseProfile::from(u);
    for (auto _ : state) benchmark::DoNotOptimize(p.coarea_integral());
}
BENCHMARK(BM_Coarea)->Arg(1000)->Arg(10000)->Arg(100000);

static void BM_Rearrangement(benchmark::State& state) {
    const auto u = generate_bv1d(1, 2, 10000);
    const auto p = PiecewiseProfile::from(u);
    const double V = p.domain_measure();
    for (auto _ : state) {
        double acc = 0.0;
        for (int k = 0; k < 1000; ++k) acc += p.u_star(V * k / 1000.0);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_Rearrangement);

static void BM_PointwiseComparison(benchmark::State& state) {
    const auto u = generate_bv1d(1, 3, 10000);
    const auto p = PiecewiseProfile::from(u);
    for (auto _ : state) benchmark::DoNotOptimize(pointwise_comparison(p));
}
BENCHMARK(BM_PointwiseComparison);

static void BM_MinimizeFBall(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(minimize_f_ball(1.0, 2, 0.1,
                                                 static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_MinimizeFBall)->Arg(1000)->Arg(10000);

static void BM_PoissonSolve(benchmark::State& state) {
    const Polygon square{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
    for (auto _ : state) {
        auto g = make_grid(square, static_cast<std::size_t>(state.range(0)));
        solve_torsion_poisson(g);
        benchmark::DoNotOptimize(g.values);
    }
}
BENCHMARK(BM_PoissonSolve)->Arg(64)->Arg(128);

BENCHMARK_MAIN();
