#include <benchmark/benchmark.h>

#include "mlcseg/engel.hpp"
#include "mlcseg/instances.hpp"
#include "mlcseg/neighborhood.hpp"
#include "mlcseg/pareto.hpp"
#include "mlcseg/sequencing.hpp"

namespace {

using namespace mlcseg;

IntensityMatrix instance(Intensity level, std::size_t index = 0) {
    GeneratorSpec spec;
    spec.max_value = level;
    spec.seed = 7;
    spec.count = index + 1;
    return random_matrix(spec, index);
}

// Argument: intensity level L of a random 15x15 matrix.
void BM_EngelKali(benchmark::State& state) {
    const IntensityMatrix a = instance(static_cast<Intensity>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(engel_decompose(a, Rule::Kali));
}
BENCHMARK(BM_EngelKali)->Arg(3)->Arg(10)->Arg(16);

void BM_EngelLast(benchmark::State& state) {
    const IntensityMatrix a = instance(static_cast<Intensity>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(engel_decompose(a, Rule::Last));
}
BENCHMARK(BM_EngelLast)->Arg(3)->Arg(10)->Arg(16);

void BM_OptimizeSequence(benchmark::State& state) {
    const Decomposition d = engel_decompose(instance(10), Rule::Kali);
    const auto bound = static_cast<std::size_t>(state.range(0));
    state.counters["K"] = static_cast<double>(d.size());
    for (auto _ : state) benchmark::DoNotOptimize(optimize_sequence(d, bound));
}
// 0 forces 2-opt; 14 is the default exact bound.
BENCHMARK(BM_OptimizeSequence)->Arg(0)->Arg(14);

void BM_ExactPath(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    Decomposition d = engel_decompose(instance(16), Rule::Kali);
    d.terms.resize(std::min(k, d.size()));
    const DistanceMatrix dist = distance_matrix(d);
    for (auto _ : state) benchmark::DoNotOptimize(exact_path(dist, kMaxExactBound));
}
BENCHMARK(BM_ExactPath)->DenseRange(8, 16, 4);

void BM_Neighborhood(benchmark::State& state) {
    const IntensityMatrix a = instance(static_cast<Intensity>(state.range(0)));
    const Decomposition d = optimize_sequence(engel_decompose(a, Rule::Last));
    std::size_t visited = 0;
    for (auto _ : state) visited = for_each_neighbor(a, d, [](Decomposition&& nb) { benchmark::DoNotOptimize(nb); });
    state.counters["neighbors"] = static_cast<double>(visited);
}
BENCHMARK(BM_Neighborhood)->Arg(3)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_TwoPhase(benchmark::State& state) {
    const IntensityMatrix a = instance(static_cast<Intensity>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(two_phase(a));
}
BENCHMARK(BM_TwoPhase)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
