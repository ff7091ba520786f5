#include <benchmark/benchmark.h>

#include "cyclorient/biconnect.hpp"
#include "cyclorient/decide.hpp"
#include "cyclorient/oracle.hpp"
#include "cyclorient/orient.hpp"

using namespace cyclorient;

namespace {

constexpr std::uint64_t kSeed = 7;

void BM_DecideLinear(benchmark::State& state) {
    const GeneratedGraph gen = gen_co_graph(kSeed, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const DecideResult r = is_cyclically_orientable(gen.graph, DecideAlgorithm::linear);
        benchmark::DoNotOptimize(r.answer);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecideLinear)->RangeMultiplier(2)->Range(1 << 12, 1 << 18)->Complexity(benchmark::oN);

void BM_DecideNaive(benchmark::State& state) {
    const GeneratedGraph gen = gen_co_graph(kSeed, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const DecideResult r = is_cyclically_orientable(gen.graph, DecideAlgorithm::naive);
        benchmark::DoNotOptimize(r.answer);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DecideNaive)->RangeMultiplier(2)->Range(1 << 9, 1 << 12)->Complexity(benchmark::oNSquared);

void BM_BiconnectedComponents(benchmark::State& state) {
    const GeneratedGraph gen = gen_co_graph(kSeed, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const BiconnectedDecomposition d = biconnected_components(gen.graph);
        benchmark::DoNotOptimize(d.components.size());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BiconnectedComponents)
    ->RangeMultiplier(4)
    ->Range(1 << 12, 1 << 18)
    ->Complexity(benchmark::oN);

void BM_FindCyclicOrientation(benchmark::State& state) {
    const GeneratedGraph gen = gen_co_graph(kSeed, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        const auto o = find_cyclic_orientation(gen.graph);
        benchmark::DoNotOptimize(o.has_value());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindCyclicOrientation)->RangeMultiplier(4)->Range(1 << 10, 1 << 16);

} // namespace

BENCHMARK_MAIN();
