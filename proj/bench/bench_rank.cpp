#include "cyclex/algebra/presets.hpp"
#include "cyclex/core/elimination.hpp"
#include "cyclex/hochschild/cyclic.hpp"
#include "cyclex/hochschild/hochschild.hpp"
#include "cyclex/lie/ce.hpp"
#include "cyclex/lie/lie_algebra.hpp"

#include <benchmark/benchmark.h>

using namespace cyclex;

namespace {

// b on Hoch(A, A) in degree p for A = truncated_poly(3); range(0) is p.
SparseMatrix hoch_matrix(int p) { return hoch_b(Bimodule::regular(preset("truncated_poly(3)")), p); }

void BM_RankParallel(benchmark::State& state)
{
    const SparseMatrix m = hoch_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank(m));
    state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_RankSerial(benchmark::State& state)
{
    const SparseMatrix m = hoch_matrix(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(rank_serial(m));
    state.counters["cols"] = static_cast<double>(m.cols());
}

void BM_HCHomology(benchmark::State& state)
{
    const auto a = preset("dual_numbers");
    for (auto _ : state)
        benchmark::DoNotOptimize(hc_homology(*a, static_cast<int>(state.range(0))));
}

void BM_CEHomologyGl(benchmark::State& state)
{
    const LieAlgebra g = gl(*preset("Q"), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ce_homology(g, 3));
}

} // namespace

BENCHMARK(BM_RankParallel)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankSerial)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HCHomology)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CEHomologyGl)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
