// Serial versus OpenMP kernels.

#include "rado/kernels.hpp"
#include "rado/search.hpp"
#include "rado/text.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace rado;

IntPolynomial poly(const char* text) { return parse_polynomial(text).polynomial; }

void BM_SolutionsSerial(benchmark::State& state) {
    const auto p = poly("x^2 + y^2 - z^2");
    for (auto _ : state) benchmark::DoNotOptimize(kernels::solutions_serial(p, state.range(0)));
}

void BM_SolutionsParallel(benchmark::State& state) {
    const auto p = poly("x^2 + y^2 - z^2");
    for (auto _ : state) benchmark::DoNotOptimize(kernels::solutions_parallel(p, state.range(0)));
}

void BM_MonochromaticSerial(benchmark::State& state) {
    const auto p = poly("x + y - 3z");
    const auto colors = Coloring::last_nonzero_digit(5).table(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::first_monochromatic_serial(p, state.range(0), colors, false));
}

void BM_MonochromaticParallel(benchmark::State& state) {
    const auto p = poly("x + y - 3z");
    const auto colors = Coloring::last_nonzero_digit(5).table(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::first_monochromatic_parallel(p, state.range(0), colors, false));
}

std::vector<MultiIndex> elements(std::size_t n) {
    std::vector<MultiIndex> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(MultiIndex::unit(n, i));
    return out;
}

void BM_OrderingsSerial(benchmark::State& state) {
    const auto e = elements(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::orderings_serial(e));
}

void BM_OrderingsParallel(benchmark::State& state) {
    const auto e = elements(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernels::orderings_parallel(e));
}

}  // namespace

BENCHMARK(BM_SolutionsSerial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolutionsParallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MonochromaticSerial)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonochromaticParallel)->Arg(300)->Arg(600)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OrderingsSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrderingsParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
