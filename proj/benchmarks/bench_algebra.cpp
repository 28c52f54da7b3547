#include <benchmark/benchmark.h>

#include "veccirc/polyring.hpp"
#include "veccirc/rng.hpp"

using namespace veccirc;

namespace {

FieldVector random_vec(const FieldRef& f, std::size_t n, SplitMix64& rng) {
    std::vector<FieldElement> c(n);
    for (auto& x : c) x = static_cast<FieldElement>(rng.below(f->order()));
    return FieldVector(f, std::move(c));
}

void FieldMul(benchmark::State& state, const FieldRef& f) {
    const unsigned q = f->order();
    std::uint8_t acc = 1;
    std::uint8_t x = 1;
    for (auto _ : state) {
        x = static_cast<std::uint8_t>(x % (q - 1) + 1);  // stays nonzero
        acc = f->mul(acc == 0 ? 1 : acc, x);
        benchmark::DoNotOptimize(acc);
    }
}

void BM_FieldMul_GF4(benchmark::State& state) { FieldMul(state, Field::gf4()); }
BENCHMARK(BM_FieldMul_GF4);

void BM_FieldMul_GF9(benchmark::State& state) {
    static const FieldRef f9 = Field::create(3, 2);
    FieldMul(state, f9);
}
BENCHMARK(BM_FieldMul_GF9);

void BM_VectorCyclicShift(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(n);
    const ShiftVector lambda(random_vec(Field::gf4(), n, rng));
    FieldVector v = random_vec(Field::gf4(), n, rng);
    for (auto _ : state) {
        v = vector_cyclic_shift(lambda, v);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_VectorCyclicShift)->Arg(6)->Arg(13)->Arg(32);

void BM_VecCirculant(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(n);
    const ShiftVector lambda(random_vec(Field::gf4(), n, rng));
    const FieldVector v = random_vec(Field::gf4(), n, rng);
    for (auto _ : state) {
        FieldMatrix m = vec_circulant(lambda, v);
        benchmark::DoNotOptimize(m);
    }
}
BENCHMARK(BM_VecCirculant)->Arg(6)->Arg(13);

void BM_MatMul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(n);
    const ShiftVector lambda(random_vec(Field::gf4(), n, rng));
    const FieldMatrix a = vec_circulant(lambda, random_vec(Field::gf4(), n, rng));
    const FieldMatrix b = vec_circulant(lambda, random_vec(Field::gf4(), n, rng));
    for (auto _ : state) {
        FieldMatrix c = mat_mul(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_MatMul)->Arg(8)->Arg(13);

void BM_MatRank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(n);
    const ShiftVector lambda(random_vec(Field::gf4(), n, rng));
    const FieldMatrix m = vec_circulant(lambda, random_vec(Field::gf4(), n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_rank(m));
    }
}
BENCHMARK(BM_MatRank)->Arg(13);

void BM_QuotientMul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    SplitMix64 rng(n);
    const ShiftVector lambda(random_vec(Field::gf4(), n, rng));
    const QuotientElement a(lambda, poly_from_vector(random_vec(Field::gf4(), n, rng)));
    const QuotientElement b(lambda, poly_from_vector(random_vec(Field::gf4(), n, rng)));
    for (auto _ : state) {
        QuotientElement c = quotient_mul(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_QuotientMul)->Arg(13);

}  // namespace
