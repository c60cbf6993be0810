#include <benchmark/benchmark.h>

#include "magic3/decompose.hpp"
#include "magic3/enumerate.hpp"
#include "magic3/series.hpp"

using namespace magic3;

static void BM_FamilyEnumeration(benchmark::State& state)
{
    const auto s = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t n = 0;
        for_each_family_square(s, [&](const Decomposition&, const MagicSquare&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
    state.counters["squares"] = static_cast<double>(count_closed(s));
}
BENCHMARK(BM_FamilyEnumeration)->Arg(12)->Arg(50)->Arg(200);

static void BM_BruteForce(benchmark::State& state)
{
    const auto s = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        std::uint64_t n = 0;
        for_each_brute_force(s, [&](const MagicSquare&) { ++n; });
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_BruteForce)->Arg(12)->Arg(50)->Arg(200);

static void BM_Decompose(benchmark::State& state)
{
    const MagicSquare m = construct({Family::F2, 17, 5, 9, Dihedral::fa});
    for (auto _ : state) benchmark::DoNotOptimize(decompose(m));
}
BENCHMARK(BM_Decompose);

static void BM_SeriesExpand(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expand(magic_gf(), n));
}
BENCHMARK(BM_SeriesExpand)->Arg(1000)->Arg(100000);

static void BM_CountClosed(benchmark::State& state)
{
    std::uint64_t s = 0;
    for (auto _ : state) benchmark::DoNotOptimize(count_closed(s++ % 1000000));
}
BENCHMARK(BM_CountClosed);

BENCHMARK_MAIN();
