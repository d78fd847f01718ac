#include "arrcrit/critical.hpp"
#include "arrcrit/io.hpp"
#include "arrcrit/os_algebra.hpp"
#include "arrcrit/singular_rank.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace arrcrit;

namespace {

Arrangement load(const std::string& name) {
    return io::parse_arrangement(io::read_json_file(std::string(ARRCRIT_FIXTURE_DIR) + "/" + name + ".json"));
}

WeightBasis weights(const std::string& name, const Arrangement& arr) {
    return io::parse_weights(io::read_json_file(std::string(ARRCRIT_FIXTURE_DIR) + "/" + name + "_lambda.json"),
                             arr.size());
}

const char* const kNames[] = {"braid", "prism", "cube", "simplex8", "pappus", "hessian"};

void BM_Matroid(benchmark::State& state) {
    const auto arr = load(kNames[state.range(0)]);
    for (auto _ : state) {
        const Arrangement copy(arr.field(), arr.forms());
        benchmark::DoNotOptimize(copy.matroid().maximal_nested_sets().size());
    }
    state.SetLabel(kNames[state.range(0)]);
}

void BM_NormalFormTop(benchmark::State& state) {
    const auto arr = load(kNames[state.range(0)]);
    for (auto _ : state) {
        const OSAlgebra os(arr);
        for (Mask s = 1; s <= arr.ground(); ++s)
            if (popcount(s) == arr.ell() + 1) benchmark::DoNotOptimize(os.normal_form(to_indices(s)).coords.size());
    }
    state.SetLabel(kNames[state.range(0)]);
}

void BM_FlagRank(benchmark::State& state) {
    const auto arr = load(kNames[state.range(0)]);
    const auto lam = weights(kNames[state.range(0)], arr);
    for (auto _ : state) benchmark::DoNotOptimize(flag_rank_condition(arr, lam).rank);
    state.SetLabel(kNames[state.range(0)]);
}

void BM_WedgeRank(benchmark::State& state) {
    const auto arr = load(kNames[state.range(0)]);
    const auto lam = weights(kNames[state.range(0)], arr);
    const OSAlgebra os(arr);
    for (auto _ : state) benchmark::DoNotOptimize(os.subspace_wedge_rank(lam).rank);
    state.SetLabel(kNames[state.range(0)]);
}

void BM_CriticalEquations(benchmark::State& state) {
    const auto arr = load(kNames[state.range(0)]);
    for (auto _ : state) benchmark::DoNotOptimize(critical_equations(arr).size());
    state.SetLabel(kNames[state.range(0)]);
}

} // namespace

BENCHMARK(BM_Matroid)->DenseRange(0, 5);
BENCHMARK(BM_NormalFormTop)->DenseRange(0, 4);
BENCHMARK(BM_FlagRank)->DenseRange(0, 5);
BENCHMARK(BM_WedgeRank)->DenseRange(0, 5);
BENCHMARK(BM_CriticalEquations)->DenseRange(0, 5);

BENCHMARK_MAIN();
