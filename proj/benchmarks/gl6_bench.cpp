#include <benchmark/benchmark.h>

#include "gl6/arch.hpp"
#include "gl6/catalog.hpp"
#include "gl6/charalg.hpp"
#include "gl6/galois.hpp"
#include "gl6/hecke.hpp"
#include "gl6/isobaric.hpp"
#include "gl6/numlemma.hpp"
#include "gl6/suite.hpp"

using namespace gl6;

namespace {

const BasisPtr& free_basis() {
    static const auto b = parse_basis("basis chi:3, alpha1, alpha2, beta1, beta2, beta3;");
    return b;
}

void BM_ExteriorCubeProduct(benchmark::State& state) {
    const auto a2 = parse_parameter(free_basis(), "[alpha1, alpha2]");
    const auto a3 = parse_parameter(free_basis(), "[beta1, beta2, beta3]");
    for (auto _ : state) benchmark::DoNotOptimize(verify_exterior_cube_product(a2, a3));
}
BENCHMARK(BM_ExteriorCubeProduct);

void BM_ExteriorPower(benchmark::State& state) {
    std::string lit = "[";
    for (int i = 0; i < state.range(0); ++i) lit += (i ? ", " : "") + std::string(i % 2 ? "beta1*chi^" : "alpha1*chi^") + std::to_string(i);
    const auto p = parse_parameter(free_basis(), lit + "]");
    for (auto _ : state) benchmark::DoNotOptimize(ext_k(p, static_cast<unsigned>(state.range(0) / 2)));
}
BENCHMARK(BM_ExteriorPower)->DenseRange(4, 12, 4);

void BM_DecomposeProducts(benchmark::State& state) {
    const auto g = gl2_3();
    const auto irr = irreducibles(g);
    for (auto _ : state)
        for (const auto& x : irr)
            for (const auto& y : irr)
                if (x.integer_degree() == 3 && y.integer_degree() == 2) benchmark::DoNotOptimize(decompose(x * y));
}
BENCHMARK(BM_DecomposeProducts);

void BM_RootOfUnitySweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(root_of_unity_sweep(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RootOfUnitySweep)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ClaimSweep(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(claim_sweep(state.range(0), 42));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClaimSweep)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_BridgeCheck(benchmark::State& state) {
    const auto t2 = synthetic_gl2_table(42), t3 = synthetic_gl3_table(42, false);
    for (auto _ : state) benchmark::DoNotOptimize(bridge_check(t3, t2));
}
BENCHMARK(BM_BridgeCheck);

void BM_CohomologicalTensor(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(tensor_with_gl3(weight4_type()));
}
BENCHMARK(BM_CohomologicalTensor);

}  // namespace

BENCHMARK_MAIN();
