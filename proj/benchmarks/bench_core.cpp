#include <benchmark/benchmark.h>

#include <vector>

#include "tgc/center.hpp"
#include "tgc/cocycle.hpp"
#include "tgc/solver.hpp"
#include "tgc/sweep.hpp"

namespace {

using namespace tgc;

PGroupShape worked_shape() { return PGroupShape::validate(3, {Block{2, 2}, Block{1, 2}}); }

PairingMatrix worked_matrix() {
    return PairingMatrix::validate(worked_shape(), {
        {0, 1, 1, 1},
        {8, 0, 2, 2},
        {2, 1, 0, 1},
        {2, 1, 2, 0},
    });
}

void BM_Normalize(benchmark::State& state) {
    PairingMatrix a = worked_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalize(a));
    }
}
BENCHMARK(BM_Normalize);

void BM_Diagonalize(benchmark::State& state) {
    // One random instance per size, shaped (Z/27)^m.
    const int m = static_cast<int>(state.range(0));
    PGroupShape shape = PGroupShape::validate(3, {Block{3, m}});
    Rng rng(1234);
    NormalizedMatrix t = normalize(random_pairing_matrix(shape, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(diagonalize(t.matrix()));
    }
}
BENCHMARK(BM_Diagonalize)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Kernel(benchmark::State& state) {
    NormalizedMatrix t = normalize(worked_matrix());
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel(t));
    }
}
BENCHMARK(BM_Kernel);

void BM_OracleEnumeration(benchmark::State& state) {
    PGroupShape shape = worked_shape();
    NormalizedMatrix t = normalize(worked_matrix());
    for (auto _ : state) {
        benchmark::DoNotOptimize(greg_brute_force(t, shape, 1000));
    }
    state.SetItemsProcessed(state.iterations() * 729);
}
BENCHMARK(BM_OracleEnumeration);

void BM_ValidateCocycle(benchmark::State& state) {
    // |G| = 81, so each round sweeps 81^3 triples.
    PGroupShape shape = PGroupShape::validate(3, {Block{2, 1}, Block{1, 2}});
    Rng rng(4321);
    CocycleTable table = realize_cocycle(random_pairing_matrix(shape, rng));
    for (auto _ : state) {
        validate_cocycle(table);
    }
    state.SetItemsProcessed(state.iterations() * 81 * 81 * 81);
}
BENCHMARK(BM_ValidateCocycle);

void BM_CountSolutionsBrute(benchmark::State& state) {
    NormalizedMatrix t = normalize(worked_matrix());
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_solutions_brute(t, 10000));
    }
    state.SetItemsProcessed(state.iterations() * 6561);
}
BENCHMARK(BM_CountSolutionsBrute);

}  // namespace

BENCHMARK_MAIN();
