#include <cohann/annihilator.hpp>
#include <cohann/catalog.hpp>
#include <cohann/invariants.hpp>
#include <cohann/linalg.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace cohann;

namespace {

void BM_HypersurfaceAlgebra(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    Catalog c = a_n_catalog(n);
    unsigned trunc = default_truncation(c.max_degree());
    for (auto _ : state) benchmark::DoNotOptimize(hypersurface_algebra(c.f, trunc));
}
BENCHMARK(BM_HypersurfaceAlgebra)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_StableAnnihilatorAn(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    Catalog c = a_n_catalog(n);
    auto alg = hypersurface_algebra(c.f, default_truncation(c.max_degree()));
    const auto& m = c.entries.back();
    for (auto _ : state) benchmark::DoNotOptimize(stable_annihilator_space(m, *alg));
}
BENCHMARK(BM_StableAnnihilatorAn)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Ext2AnnihilatorAn(benchmark::State& state) {
    unsigned n = static_cast<unsigned>(state.range(0));
    Catalog c = a_n_catalog(n);
    auto alg = hypersurface_algebra(c.f, default_truncation(c.max_degree()));
    const auto& m = c.entries.back();
    for (auto _ : state) benchmark::DoNotOptimize(ext2_annihilator_space(m, *alg));
}
BENCHMARK(BM_Ext2AnnihilatorAn)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_MilnorNumber(benchmark::State& state) {
    SemigroupCurve curve(static_cast<unsigned>(state.range(0)), static_cast<unsigned>(state.range(1)));
    Polynomial f = curve.polynomial();
    unsigned trunc = milnor_truncation(f);
    for (auto _ : state) benchmark::DoNotOptimize(milnor_number(f, trunc));
}
BENCHMARK(BM_MilnorNumber)->Args({2, 3})->Args({3, 5})->Args({5, 7})->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
    auto size = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> v(-9, 9);
    RationalMatrix m(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m(i, j) = v(rng);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 64);

}  // namespace

BENCHMARK_MAIN();
