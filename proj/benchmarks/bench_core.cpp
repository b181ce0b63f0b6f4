// Hot-path timings: permanent evaluation, the coefficient recursion, the
// counting DP, transversal DP, and the packed xor distance scan.

#include "bijsum/counting.hpp"
#include "bijsum/fourier.hpp"
#include "bijsum/latin.hpp"
#include "bijsum/xor_prf.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace bijsum;

namespace {

CharacterVector random_character(const AbelianGroup& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    CharacterVector chi{g, std::vector<int>(g.order())};
    for (int& c : chi.coords) c = static_cast<int>(rng() % g.order());
    return chi;
}

void bm_coeff_direct(benchmark::State& state) {
    AbelianGroup g{{static_cast<int>(state.range(0))}};
    CharacterVector chi = random_character(g, 7);
    for (auto _ : state) benchmark::DoNotOptimize(coeff_direct(chi).value);
    state.SetComplexityN(state.range(0));
}

void bm_coeff_recursion(benchmark::State& state) {
    AbelianGroup g{{static_cast<int>(state.range(0))}};
    int n = g.order();
    std::vector<int> ms;
    for (int i = 0; i < 4; ++i) ms.push_back(1 + (i % (n - 1)));
    for (auto _ : state) {
        FourierTable table(g);
        benchmark::DoNotOptimize(table.coeff_multiset(ms));
    }
}

void bm_count_pairs(benchmark::State& state) {
    AbelianGroup g{{static_cast<int>(state.range(0))}};
    FunctionTable f = identity_table(g);
    for (auto _ : state) benchmark::DoNotOptimize(count_pairs(g, f).count);
}

void bm_count_triples(benchmark::State& state) {
    AbelianGroup g{{static_cast<int>(state.range(0))}};
    FunctionTable f = random_feasible_table(g, 3, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(count_tuples(g, f, 3, Strategy::TripleDp).count);
}

void bm_transversals(benchmark::State& state) {
    AbelianGroup g{{static_cast<int>(state.range(0))}};
    LatinCubeView sq(g, identity_table(g), 2);
    for (auto _ : state) benchmark::DoNotOptimize(count_transversals(sq).count);
}

void bm_xor_distance(benchmark::State& state) {
    Budgets budgets;
    budgets.pair_budget = std::uint64_t{1} << 31;
    budgets.threads = 4;
    for (auto _ : state)
        benchmark::DoNotOptimize(xor_tv(3, static_cast<int>(state.range(0)), budgets));
}

}  // namespace

BENCHMARK(bm_coeff_direct)->DenseRange(8, 12)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_coeff_recursion)->DenseRange(6, 12)->Unit(benchmark::kMicrosecond);
BENCHMARK(bm_count_pairs)->DenseRange(6, 11)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_count_triples)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_transversals)->DenseRange(6, 10)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_xor_distance)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
