#include <benchmark/benchmark.h>

#include "constacode/classify.hpp"
#include "constacode/decomp.hpp"

using namespace constacode;

namespace {

void BM_FieldMul(benchmark::State& state) {
    auto f7 = Field::make(7);
    uint64_t acc = 1;
    for (auto _ : state) {
        acc = f7->mul(acc, 3) + 1;
        if (acc >= 7) acc -= 7;
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_FieldMul);

void BM_FactorX8Plus1(benchmark::State& state) {
    auto f7 = Field::make(7);
    const FieldElement lambda0 = f7->element(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(factor_constacyclic_modulus(8, lambda0));
    }
}
BENCHMARK(BM_FactorX8Plus1);

void BM_MinDistanceDim6(benchmark::State& state) {
    auto f7 = Field::make(7);
    const ConstacyclicCode code(f7->element(6), 8, Polynomial(f7, {6, 1, 1}));
    const GeneratorMatrix m = code.generator_matrix();
    for (auto _ : state) {
        benchmark::DoNotOptimize(min_distance(m));
    }
}
BENCHMARK(BM_MinDistanceDim6);

void BM_DecomposeLength56(benchmark::State& state) {
    auto f7 = Field::make(7);
    const ConstacyclicCode code(f7->element(6), 56, Polynomial(f7, {6, 1, 1}));
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(code));
    }
}
BENCHMARK(BM_DecomposeLength56);

void BM_VerifyEquivalence56(benchmark::State& state) {
    auto f7 = Field::make(7);
    const ConstacyclicCode code(f7->element(6), 56, Polynomial(f7, {6, 1, 1}));
    const DecompositionResult r = decompose(code);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_equivalence(code, r));
    }
}
BENCHMARK(BM_VerifyEquivalence56);

void BM_ClassifyLength56(benchmark::State& state) {
    auto f7 = Field::make(7);
    const FieldElement lambda = f7->element(6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(f7, 8, 1, lambda));
    }
}
BENCHMARK(BM_ClassifyLength56);

}  // namespace

BENCHMARK_MAIN();
