#include <benchmark/benchmark.h>

#include "qcy/cycles.hpp"
#include "qcy/poly.hpp"
#include "qcy/qchar.hpp"
#include "qcy/quotients.hpp"

using namespace qcy;

static void BM_mpoly_mul(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    Ctx c = make_ctx(0, N, {});
    Partition lam(N, 2);
    MPoly a = mono_z(c, lam);
    MPoly b = mono_z(c, Partition(N, 1));
    for (auto _ : state) {
        MPoly p = a * b;
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_mpoly_mul)->Arg(4)->Arg(6)->Arg(8);

static void BM_dim_w(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dim_w(N, N / 2, 5));
}
BENCHMARK(BM_dim_w)->Arg(3)->Arg(4)->Arg(5);

static void BM_ch_w(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(ch_w(N, N / 2, 6));
}
BENCHMARK(BM_ch_w)->Arg(3)->Arg(4)->Arg(5);

static void BM_kostka(benchmark::State& state) {
    int N = static_cast<int>(state.range(0));
    Partition nu(N, 1);
    for (auto _ : state) benchmark::DoNotOptimize(kostka_fermionic(N % 2, nu));
}
BENCHMARK(BM_kostka)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
