#include <benchmark/benchmark.h>

#include "veccirc/rng.hpp"
#include "veccirc/search.hpp"

using namespace veccirc;

namespace {

void BM_MinDistance_BestKnown(benchmark::State& state) {
    const auto idx = static_cast<std::size_t>(state.range(0)) - 2;
    const TableEntry& entry = builtin_code_table()[idx];
    for (auto _ : state) {
        // fresh code each time, otherwise the cache short-circuits
        AdditiveCode code = vc_code(entry.lambda, entry.v);
        benchmark::DoNotOptimize(min_distance(code));
    }
    state.SetComplexityN(static_cast<int>(entry.n));
}
BENCHMARK(BM_MinDistance_BestKnown)->Arg(6)->Arg(10)->Arg(13);

void BM_EvaluateCandidate(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(n * 7);
    std::vector<FieldElement> lam(n), v(n);
    for (auto& x : lam) x = static_cast<FieldElement>(rng.below(4));
    for (auto& x : v) x = static_cast<FieldElement>(rng.below(4));
    const ShiftVector lambda(Field::gf4(), lam);
    const FieldVector vec(Field::gf4(), v);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_candidate(lambda, vec));
    }
}
BENCHMARK(BM_EvaluateCandidate)->Arg(6)->Arg(13);

void BM_ExhaustiveSearch(benchmark::State& state) {
    SearchConfig cfg;
    cfg.n = static_cast<std::size_t>(state.range(0));
    cfg.workers = static_cast<unsigned>(state.range(1));
    for (auto _ : state) {
        SearchResult r = exhaustive_search(cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_ExhaustiveSearch)->Args({3, 1})->Args({4, 1})->Args({4, 4});

void BM_RandomSearch(benchmark::State& state) {
    SearchConfig cfg;
    cfg.n = static_cast<std::size_t>(state.range(0));
    cfg.mode = SearchMode::random;
    cfg.seed = 7;
    cfg.budget = static_cast<std::uint64_t>(state.range(1));
    for (auto _ : state) {
        SearchResult r = random_search(cfg);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_RandomSearch)->Args({10, 2000})->Args({13, 2000});

void BM_VerifyBuiltinTable(benchmark::State& state) {
    for (auto _ : state) {
        TableVerification v = verify_table(builtin_code_table());
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_VerifyBuiltinTable);

}  // namespace
