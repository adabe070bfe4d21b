#include "clm/builtin.hpp"
#include "clm/dist.hpp"

#include <benchmark/benchmark.h>

using namespace clm;

static void BM_character_table(benchmark::State& state) {
    GroupSpecDoc doc = builtin_group("S5");
    for (auto _ : state) {
        CharacterTable t = character_table(*doc.group);
        benchmark::DoNotOptimize(t.rows);
    }
}
BENCHMARK(BM_character_table)->Unit(benchmark::kMillisecond);

static void BM_rational_components(benchmark::State& state) {
    GroupSpecDoc doc = builtin_group("A5");
    CharacterTable t = character_table(*doc.group);
    for (auto _ : state) {
        auto comps = rational_components(t);
        benchmark::DoNotOptimize(comps);
    }
}
BENCHMARK(BM_rational_components)->Unit(benchmark::kMillisecond);

static void BM_snf(benchmark::State& state) {
    long n = state.range(0);
    IMat m(static_cast<std::size_t>(n), IVec(static_cast<std::size_t>(n)));
    std::mt19937_64 rng(7);
    for (auto& row : m)
        for (Int& x : row) x = Int(static_cast<long>(rng() % 2001)) - 1000;
    for (auto _ : state) {
        auto d = snf_diagonal(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_snf)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_sur_count(benchmark::State& state) {
    Partition lam({4, 3, 2, 1}), mu({2, 1});
    for (auto _ : state) {
        Int c = sur_count_formula(3, lam, mu);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_sur_count);

static void BM_truncated_table(benchmark::State& state) {
    GroupSpecDoc doc = builtin_group("S3");
    CharacterTable tab = character_table(*doc.group);
    auto comps = rational_components(tab);
    RankSpec r = rank_from_u(tab, comps, {Rat(1), Rat(1)});
    TruncationSpec tr;
    tr.prime_exponents.push_back({Int(2), 2});
    tr.order_bound = Int(256);
    for (auto _ : state) {
        DistributionTable t = truncated_table(tab, comps, {2}, r, tr);
        benchmark::DoNotOptimize(t.rows);
    }
}
BENCHMARK(BM_truncated_table)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
