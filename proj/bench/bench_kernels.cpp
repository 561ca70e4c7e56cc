#include <algorithm>
#include <numeric>
#include <random>

#include <benchmark/benchmark.h>

#include "arena/kernels.hpp"
#include "arena/omaker.hpp"
#include "arena/sweep.hpp"

using namespace arena;

namespace {

OrientationBoard random_acyclic(int n, double density, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::bernoulli_distribution coin(density);
    auto b = new_board(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.direct({order[i], order[j]});
    return b;
}

void BM_ThreatReference(benchmark::State& state)
{
    auto board = random_acyclic(static_cast<int>(state.range(0)), 0.1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(threat_scores_reference(board));
}

void BM_ThreatKernel(benchmark::State& state)
{
    auto board = random_acyclic(static_cast<int>(state.range(0)), 0.1, 1);
    const int threads = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(threat_scores(board, threads));
}

void BM_Reachability(benchmark::State& state)
{
    auto board = random_acyclic(static_cast<int>(state.range(0)), 0.1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(reachability(board));
}

void BM_MonotoneSweep(benchmark::State& state)
{
    std::vector<GameConfig> configs;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        GameConfig c;
        c.n = 48;
        c.b = 42;
        c.omaker = "random";
        c.seed = seed;
        configs.push_back(c);
    }
    const int threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(configs, threads));
}

}  // namespace

BENCHMARK(BM_ThreatReference)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ThreatKernel)->Args({16, 1})->Args({32, 1})->Args({64, 1})->Args({200, 1})->Args({200, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Reachability)->Arg(64)->Arg(200)->Arg(400)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MonotoneSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
