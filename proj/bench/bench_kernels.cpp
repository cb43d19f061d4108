// Serial reference vs OpenMP kernels on Scherk-type graphs.

#include <benchmark/benchmark.h>

#include <cmath>

#include "mvt/constraints.hpp"
#include "mvt/solvers.hpp"
#include "mvt/variational.hpp"

namespace {

mvt::GraphGrid scherk(std::size_t n) {
  return mvt::GraphGrid::from_function(-0.7, 0.7, -0.7, 0.7, n, n,
                                       [](double x, double y) { return std::log(std::cos(y) / std::cos(x)); });
}

mvt::Exec exec_of(const benchmark::State& st) { return st.range(1) ? mvt::Exec::parallel : mvt::Exec::serial; }

void args(benchmark::internal::Benchmark* b) {
  for (long n : {65, 129, 257})
    for (long p : {0, 1}) b->Args({n, p});
  b->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);
}

void BM_DeltaL(benchmark::State& st) {
  const mvt::SurfaceGrid S = scherk(static_cast<std::size_t>(st.range(0))).to_surface();
  const mvt::PlateauLagrangian L(3);
  for (auto _ : st) benchmark::DoNotOptimize(mvt::delta_L_surface(L, S, exec_of(st)));
}

void BM_NambuGotoDeltaL(benchmark::State& st) {
  const mvt::SurfaceGrid S = scherk(static_cast<std::size_t>(st.range(0))).to_surface();
  const mvt::NambuGotoLagrangian L(mvt::Metric::euclidean(3));
  for (auto _ : st) benchmark::DoNotOptimize(mvt::delta_L_surface(L, S, exec_of(st)));
}

void BM_Residual(benchmark::State& st) {
  const mvt::GraphGrid g = scherk(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mvt::minimal_surface_residual(g, exec_of(st)));
}

void BM_Jacobian(benchmark::State& st) {
  const mvt::GraphGrid g = scherk(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mvt::minimal_surface_jacobian(g, exec_of(st)));
}

void BM_Nonholonomic(benchmark::State& st) {
  const mvt::SurfaceGrid S = scherk(static_cast<std::size_t>(st.range(0))).to_surface();
  const mvt::PlateauLagrangian L(3);
  const auto A = mvt::AffineConstraint2::plateau_diagonal();
  for (auto _ : st) benchmark::DoNotOptimize(mvt::nonholonomic_check(L, S, A, 1e-6, exec_of(st)));
}

void BM_SolvePlateau(benchmark::State& st) {
  const mvt::GraphGrid g = scherk(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(mvt::solve_plateau(g, mvt::SolveOptions{1e-8, 50, 1.0}, exec_of(st)));
}

}  // namespace

BENCHMARK(BM_DeltaL)->Apply(args);
BENCHMARK(BM_NambuGotoDeltaL)->Apply(args);
BENCHMARK(BM_Residual)->Apply(args);
BENCHMARK(BM_Jacobian)->Apply(args);
BENCHMARK(BM_Nonholonomic)->Apply(args);
BENCHMARK(BM_SolvePlateau)->Args({65, 0})->Args({65, 1})->Args({129, 0})->Args({129, 1})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
