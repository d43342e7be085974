// Serial reference paths against the OpenMP paths of the main kernels.
// Argument 0 runs Exec::Serial, argument 1 runs Exec::Parallel.

#include "tropibound/bergman_fan.hpp"
#include "tropibound/numeric_verify.hpp"
#include "tropibound/oriented_matroid.hpp"
#include "tropibound/regular_subdivision.hpp"
#include "tropibound/tie_vertices.hpp"
#include "tropibound/tropical_intersection.hpp"
#include "tropibound/vertical_systems.hpp"

#include <benchmark/benchmark.h>

using namespace tropibound;

namespace {

VerticalSystem crn_system()
{
    CRNModel m;
    m.n_stoich = {{-1, 0, 0, 1, 0, 0},  {1, -1, 0, 0, 1, 0},  {0, 1, -1, -1, 0, 0},
                  {0, 0, 1, 0, -1, 0},  {0, 0, 0, -1, -1, 1}, {0, 0, 0, 1, 1, -1}};
    m.b = {{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0},
           {0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 0, 0, 1}};
    m.w = {{1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1}};
    m.t = {Rational(10), Rational(20)};
    m.h = {Rational(7), Rational(-6), Rational(-2), Rational(-3), Rational(-3), Rational(3)};
    return assemble_crn(m);
}

// 3 x 12 exponent matrix with distinct columns and a generic lift.
std::pair<IntMatrix, RationalVector> grid_config()
{
    IntMatrix a(3, 12);
    RationalVector h;
    for (std::size_t j = 0; j < 12; ++j) {
        a(0, j) = static_cast<std::int64_t>(j % 3);
        a(1, j) = static_cast<std::int64_t>((j / 3) % 2);
        a(2, j) = static_cast<std::int64_t>(j / 6);
        h.emplace_back(static_cast<long>((j * j * 7 + 3 * j) % 11), 3);
        h.back().canonicalize();
    }
    return {a, h};
}

Exec exec_of(const benchmark::State& state)
{
    return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

void BM_RealizeFromKernel(benchmark::State& state)
{
    const auto sys = crn_system();
    for (auto _ : state) {
        benchmark::DoNotOptimize(realize_from_kernel(sys.c, exec_of(state)));
    }
}

void BM_PositiveFan(benchmark::State& state)
{
    const auto m = realize_from_kernel(crn_system().c);
    const auto fine = fine_fan(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(positive_fan(m, fine, exec_of(state)));
    }
}

void BM_IntersectViaFan(benchmark::State& state)
{
    const auto sys = crn_system();
    const auto m = realize_from_kernel(sys.c);
    const auto fan = positive_fan(m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect_via_fan(m, fan, sys.a, sys.h, exec_of(state)));
    }
}

void BM_TieVertices(benchmark::State& state)
{
    const auto sys = crn_system();
    const auto m = realize_from_kernel(sys.c);
    for (auto _ : state) {
        benchmark::DoNotOptimize(positive_tie_vertices(m, sys.a, sys.h, exec_of(state)));
    }
}

void BM_FullCells(benchmark::State& state)
{
    const auto [a, h] = grid_config();
    for (auto _ : state) {
        benchmark::DoNotOptimize(full_cells(a, h, exec_of(state)));
    }
}

void BM_CountRoots(benchmark::State& state)
{
    const auto sys = crn_system();
    const auto report = lower_bound(sys.c, sys.a, sys.h);
    CountOptions options;
    options.exec = exec_of(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_roots(sys, report, options));
    }
}

}  // namespace

BENCHMARK(BM_RealizeFromKernel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PositiveFan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntersectViaFan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TieVertices)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_FullCells)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountRoots)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
