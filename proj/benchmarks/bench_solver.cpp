#include <benchmark/benchmark.h>

#include "femvar/analysis.hpp"
#include "femvar/assembly.hpp"
#include "femvar/linear_solver.hpp"

namespace {

using namespace femvar;

void BM_AssembleAndSolve(benchmark::State& state) {
    const auto method = static_cast<MethodKind>(state.range(0));
    const Mesh1D mesh(1.0, 2.0, static_cast<int>(state.range(1)));
    const QuadratureRule rule = gauss_legendre(kDefaultQuadratureOrder);
    for (auto _ : state) {
        const SolveReport r = lu_solve(apply_dirichlet(assemble(method, 100.0, mesh, rule)));
        benchmark::DoNotOptimize(r.solution.data());
    }
}
BENCHMARK(BM_AssembleAndSolve)
    ->ArgsProduct({{static_cast<int>(MethodKind::SG), static_cast<int>(MethodKind::GLS),
                    static_cast<int>(MethodKind::CGLS)},
                   {25, 100, 400}});

void BM_RcondEstimate(benchmark::State& state) {
    const Mesh1D mesh(1.0, 2.0, static_cast<int>(state.range(0)));
    const LinearSystem s = apply_dirichlet(assemble(MethodKind::GLS, 100.0, mesh, gauss_legendre(2)));
    for (auto _ : state) benchmark::DoNotOptimize(rcond_estimate(s.matrix));
}
BENCHMARK(BM_RcondEstimate)->Arg(25)->Arg(100)->Arg(400);

void BM_FullSweep(benchmark::State& state) {
    for (auto _ : state) {
        const SweepResult r = run_sweep(SweepConfig{});
        benchmark::DoNotOptimize(r.cases.data());
    }
}
BENCHMARK(BM_FullSweep)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
