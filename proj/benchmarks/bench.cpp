#include <benchmark/benchmark.h>

#include "enriques/cases.hpp"
#include "enriques/classify.hpp"

using namespace enriques;

static void BM_SolvePair(benchmark::State& state) {
    const auto& g = find_bundled_case("6-2")->figure;
    for (auto _ : state) {
        auto sol = solve_pair(g);
        benchmark::DoNotOptimize(sol);
    }
}
BENCHMARK(BM_SolvePair);

static void BM_KltCheckFullComplement(benchmark::State& state) {
    const auto& g = find_bundled_case("51-2")->figure;
    std::set<int> t = {2, 3};
    for (auto _ : state) {
        auto r = is_admissible(g, t);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_KltCheckFullComplement);

static void BM_Automorphisms(benchmark::State& state) {
    const auto& g = find_bundled_case("51-2")->figure;
    for (auto _ : state) {
        auto auts = automorphisms(g);
        benchmark::DoNotOptimize(auts);
    }
}
BENCHMARK(BM_Automorphisms);

static void BM_EnumerateCase(benchmark::State& state) {
    const auto& rec = *find_bundled_case("9-1");
    for (auto _ : state) {
        auto sets = enumerate_admissible(rec);
        benchmark::DoNotOptimize(sets);
    }
}
BENCHMARK(BM_EnumerateCase);

static void BM_VerifyCase56(benchmark::State& state) {
    const auto& rec = *find_bundled_case("56");
    for (auto _ : state) {
        auto v = verify_case(rec);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_VerifyCase56);

BENCHMARK_MAIN();
