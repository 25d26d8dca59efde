#include "liecoh/ce/forms.hpp"
#include "liecoh/semidirect/semidirect.hpp"

#include <benchmark/benchmark.h>

using namespace liecoh;

namespace {

LieAlgebra algebra_for(int which) {
    switch (which) {
        case 0: return sl(2);
        case 1: return gl(2);
        case 2: return sl(3);
        default: return gl(3);
    }
}

void BM_ce_matrix(benchmark::State& state) {
    const LieAlgebra g = algebra_for(static_cast<int>(state.range(0)));
    const ModuleAction v = ModuleAction::adjoint(g);
    const auto p = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(ce_matrix(g, v, p));
    state.SetLabel(std::to_string(g.dim()) + "-dim, adjoint");
}
BENCHMARK(BM_ce_matrix)->Args({0, 2})->Args({2, 2})->Args({3, 3})->Unit(benchmark::kMillisecond);

void BM_cohomology(benchmark::State& state) {
    const LieAlgebra g = algebra_for(static_cast<int>(state.range(0)));
    const ModuleAction v = ModuleAction::adjoint(g);
    const auto p = static_cast<std::size_t>(state.range(1));
    std::size_t dim = 0;
    for (auto _ : state) {
        CohomologySpace h(g, v, p);
        dim = h.dim();
        benchmark::DoNotOptimize(dim);
    }
    state.counters["dimH"] = static_cast<double>(dim);
}
BENCHMARK(BM_cohomology)->Args({0, 2})->Args({1, 2})->Args({2, 2})->Args({2, 3})->Unit(benchmark::kMillisecond);

void BM_kernel_basis(benchmark::State& state) {
    const LieAlgebra g = sl(3);
    const SparseMatrix d = ce_matrix(g, ModuleAction::trivial(g, 1), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(d));
}
BENCHMARK(BM_kernel_basis)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_invariant_forms(benchmark::State& state) {
    const LieAlgebra g = algebra_for(static_cast<int>(state.range(0)));
    const ModuleAction v = ModuleAction::trivial(g, 1);
    for (auto _ : state) benchmark::DoNotOptimize(invariant_sym_forms(g, v));
}
BENCHMARK(BM_invariant_forms)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_cartan_exactness(benchmark::State& state) {
    const LieAlgebra g = algebra_for(static_cast<int>(state.range(0)));
    const BilinearFormSym k = killing_form(g);
    for (auto _ : state) benchmark::DoNotOptimize(cartan_exactness(g, k));
}
BENCHMARK(BM_cartan_exactness)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_semidirect_sequence(benchmark::State& state) {
    const auto instances = standard_semidirect_instances();
    const SemidirectContext s = instances[static_cast<std::size_t>(state.range(0))].context();
    for (auto _ : state) benchmark::DoNotOptimize(verify_exact_sequence(s));
    state.SetLabel(instances[static_cast<std::size_t>(state.range(0))].name);
}
BENCHMARK(BM_semidirect_sequence)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
