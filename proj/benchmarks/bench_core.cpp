#include <benchmark/benchmark.h>

#include "landau/fibersolver.hpp"
#include "landau/kummeroracle.hpp"
#include "landau/specfun.hpp"
#include "landau/variational.hpp"

using namespace landau;

namespace {

void BM_kummer_m(benchmark::State& state) {
  // parameters of a b = 25 determinant evaluation near the first branch
  const double a = 0.5 * (1.0 - 25.1 / 25.0);
  for (auto _ : state) benchmark::DoNotOptimize(specfun::kummer_m(a, 1.0, 12.5));
}
BENCHMARK(BM_kummer_m);

void BM_laguerre(benchmark::State& state) {
  double s = 0.0;
  for (auto _ : state) {
    s += 0.37;
    if (s > 20.0) s -= 20.0;
    benchmark::DoNotOptimize(specfun::laguerre(2, 2, s));
  }
}
BENCHMARK(BM_laguerre);

void BM_gram_pair(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(variational::gram_pair(1, 3, 25.0, BoundaryCondition::neumann()));
}
BENCHMARK(BM_gram_pair);

void BM_temple_lower(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(variational::temple_lower(1, 25.0, 1, BoundaryCondition::neumann()));
}
BENCHMARK(BM_temple_lower);

void BM_assemble(benchmark::State& state) {
  const auto mesh = fibersolver::policy_mesh(25.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        fibersolver::assemble({1, 25.0, BoundaryCondition::neumann()}, mesh, 2));
}
BENCHMARK(BM_assemble);

void BM_solve_lowest(benchmark::State& state) {
  const auto op =
      fibersolver::assemble({1, 25.0, BoundaryCondition::neumann()}, fibersolver::policy_mesh(25.0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fibersolver::solve_lowest(op, 3));
}
BENCHMARK(BM_solve_lowest);

void BM_kummer_eigenvalue(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        kummeroracle::eigenvalue({0, 25.0, BoundaryCondition::dirichlet()}, 1, 1e-12));
}
BENCHMARK(BM_kummer_eigenvalue);

}  // namespace

BENCHMARK_MAIN();
