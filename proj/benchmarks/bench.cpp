#include <benchmark/benchmark.h>

#include <random>

#include "critgraph/coverings.hpp"
#include "critgraph/families.hpp"
#include "critgraph/incidence.hpp"
#include "critgraph/normal_forms.hpp"

using namespace critgraph;

static BigIntMatrix random_matrix(unsigned seed, std::size_t n) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    BigIntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
    return m;
}

static void BM_snf(benchmark::State& state) {
    BigIntMatrix m = random_matrix(42, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(snf(m).rank);
}
BENCHMARK(BM_snf)->Arg(8)->Arg(16)->Arg(32);

static void BM_crown_critical_group(benchmark::State& state) {
    SignedMultigraph g = build_crown(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(critical_group(g).group.order());
}
BENCHMARK(BM_crown_critical_group)->Arg(5)->Arg(7)->Arg(9);

static void BM_covering_verifier(benchmark::State& state) {
    VoltageGraph vg = hg_construct(build_complete(4), group_cyclic(3));
    for (auto _ : state)
        benchmark::DoNotOptimize(verify_covering_sequence(vg).report.ok());
}
BENCHMARK(BM_covering_verifier);

BENCHMARK_MAIN();
