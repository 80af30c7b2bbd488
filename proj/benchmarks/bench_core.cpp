#include <benchmark/benchmark.h>

#include <random>

#include "rearr/extremal_families.hpp"
#include "rearr/rearrangement.hpp"
#include "rearr/suites.hpp"

namespace {

using namespace rearr;

void BM_decreasing_rearrangement(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> uv(0.0, 1.0), um(1e-7, 1.0);
    std::vector<CellSample> cells(size_t(state.range(0)));
    for (auto& c : cells) c = {uv(rng), um(rng)};
    for (auto _ : state) {
        auto u = decreasing_rearrangement(cells);
        benchmark::DoNotOptimize(u.total_measure);
    }
}
BENCHMARK(BM_decreasing_rearrangement)->Arg(1 << 14)->Arg(1 << 20);

void BM_radial_solve_and_check(benchmark::State& state) {
    const auto geom = BallGeometry::from_radius(3, 1.0);
    SplitMix rng{7};
    const auto f = random_radial_data(geom, rng);
    const auto grid = geometric_grid(1e-12 * geom.V, geom.V, 200);
    for (auto _ : state) {
        const auto v = solve_radial(geom, f);
        std::vector<double> levels(grid.size());
        for (size_t k = 0; k < grid.size(); ++k)
            levels[k] = green_rearranged(geom, grid[k]) * 2.0;
        const auto measures = superlevel_measures(v, levels);
        benchmark::DoNotOptimize(measures.back());
    }
}
BENCHMARK(BM_radial_solve_and_check);

void BM_field_rearrangement(benchmark::State& state) {
    const auto geom = BallGeometry::from_radius(3, 100.0);
    const double delta = geom.radius_of_volume(0.05);
    const auto field = translated_pair(geom, delta, 10.0);
    FieldGrid spec;
    spec.cells_per_delta = int(state.range(0));
    spec.value_floor = 0.05;
    for (auto _ : state) {
        const auto fr = field_rearrangement(field, spec);
        benchmark::DoNotOptimize(fr.t_valid);
    }
}
BENCHMARK(BM_field_rearrangement)->Arg(32)->Arg(64)->Arg(128);

void BM_tanh_sinh_singular(benchmark::State& state) {
    for (auto _ : state) {
        const double v = tanh_sinh(
            [](double, double d) { return std::pow(d, -0.8333333333333333); }, 0.0,
            1.0, 1e-12);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_tanh_sinh_singular);

} // namespace

BENCHMARK_MAIN();
