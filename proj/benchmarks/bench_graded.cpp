#include "liecoh/multiloop/multiloop.hpp"
#include "liecoh/vfields/vfields.hpp"

#include <benchmark/benchmark.h>

using namespace liecoh;

namespace {

void BM_type1_closure(benchmark::State& state) {
    const int r = static_cast<int>(state.range(0));
    const LieAlgebra k = sl(2);
    const GradedAlgebra g = mapping_algebra(k, r);
    const GradedCochain w = type1_cocycle(k, r, killing_form(k));
    const auto triples = random_tuples(g, 6, 3, 500, 1);
    for (auto _ : state) benchmark::DoNotOptimize(is_closed_on(g, w, {}, triples));
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 500);
}
BENCHMARK(BM_type1_closure)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_virasoro_certificate(benchmark::State& state) {
    const GradedAlgebra w = vector_field_algebra(1);
    const GradedCochain vir = virasoro_cocycle();
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(window_coboundary_cert(w, vir, {}, n));
}
BENCHMARK(BM_virasoro_certificate)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_psibar2_pairs(benchmark::State& state) {
    const GradedAlgebra g = vector_field_algebra(2);
    const GradedCochain pb = psibar_k(2, 2);
    const auto pairs = random_tuples(g, 3, 2, 200, 2);
    for (auto _ : state) {
        for (const auto& p : pairs) benchmark::DoNotOptimize(pb.on_basis(p));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations()) * 200);
}
BENCHMARK(BM_psibar2_pairs)->Unit(benchmark::kMillisecond);

void BM_klein_build(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(klein_bottle_algebra(2, n));
}
BENCHMARK(BM_klein_build)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_klein_centroid(benchmark::State& state) {
    const FixedPointAlgebra a = klein_bottle_algebra(2, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(graded_centroid(a, static_cast<int>(state.range(0)) / 2));
}
BENCHMARK(BM_klein_centroid)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
