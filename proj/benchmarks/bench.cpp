#include <benchmark/benchmark.h>

#include <random>
#include <utility>
#include <vector>

#include "markovhull/element.hpp"
#include "markovhull/explorer.hpp"
#include "markovhull/oracle.hpp"
#include "markovhull/semilattice.hpp"
#include "markovhull/shift.hpp"

namespace {

using namespace markovhull;

MatrixRef golden() {
    return make_matrix({"a", "b", "c"}, {{1, 1, 1}, {1, 0, 1}, {0, 1, 0}});
}

void BM_Multiply(benchmark::State& state) {
    const auto T = golden();
    const auto pool = all_elements(T, 2);
    std::mt19937 rng(1);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (int i = 0; i < 1024; ++i)
        pairs.emplace_back(rng() % pool.size(), rng() % pool.size());
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [a, b] = pairs[i++ & 1023];
        benchmark::DoNotOptimize(multiply(pool[a], pool[b]));
    }
}
BENCHMARK(BM_Multiply);

void BM_RealizeAndCompose(benchmark::State& state) {
    const auto T = golden();
    const auto g = CanonicalElement::parse_literal(T, "a|a,b,c|-");
    const auto h = CanonicalElement::parse_literal(T, "cb|a,c|-");
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto fg = compose(TruncatedMap::realize(g, depth),
                                TruncatedMap::realize(h, depth));
        benchmark::DoNotOptimize(fg);
    }
}
BENCHMARK(BM_RealizeAndCompose)->Arg(6)->Arg(8)->Arg(10);

void BM_EnumerateIdempotents(benchmark::State& state) {
    const auto T = golden();
    const int depth = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_idempotents(T, depth));
}
BENCHMARK(BM_EnumerateIdempotents)->Arg(2)->Arg(4)->Arg(6);

void BM_Fingerprint(benchmark::State& state) {
    const auto T = golden();
    const int max_k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fingerprint(T, max_k));
}
BENCHMARK(BM_Fingerprint)->Arg(2)->Arg(4)->Arg(6);

void BM_Covers(benchmark::State& state) {
    const auto T = golden();
    const auto pool = enumerate_idempotents(T, 2);
    for (auto _ : state)
        for (const auto& e : pool) benchmark::DoNotOptimize(covers(e));
}
BENCHMARK(BM_Covers);

void BM_SearchOsets(benchmark::State& state) {
    const auto T = golden();
    const SearchOptions opt;
    for (auto _ : state) benchmark::DoNotOptimize(search_osets(T, opt));
}
BENCHMARK(BM_SearchOsets);

void BM_SpectralRadius(benchmark::State& state) {
    const auto T = golden();
    for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(*T, 1e-12));
}
BENCHMARK(BM_SpectralRadius);

} // namespace

BENCHMARK_MAIN();
