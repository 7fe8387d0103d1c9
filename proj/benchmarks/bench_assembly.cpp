#include <benchmark/benchmark.h>

#include "halfbem/layers.hpp"
#include "halfbem/solver.hpp"

using namespace halfbem;

namespace {

const ElasticModuli kM = moduli_from_poisson(0.25, 1.0);

void BM_AssembleSingleLayer(benchmark::State& state) {
  const TriangleMesh sph = icosphere(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_single_layer(sph, kM));
  }
  state.SetComplexityN(sph.face_count());
}
BENCHMARK(BM_AssembleSingleLayer)->Arg(1)->Arg(2)->Complexity(benchmark::oNSquared);

void BM_AssembleDoubleLayer(benchmark::State& state) {
  const TriangleMesh sph = icosphere(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_double_layer(sph, kM));
  }
  state.SetComplexityN(sph.face_count());
}
BENCHMARK(BM_AssembleDoubleLayer)->Arg(1)->Arg(2)->Complexity(benchmark::oNSquared);

void BM_AssembleRegularOps(benchmark::State& state) {
  const TriangleMesh cavity =
      place_cavity(icosphere(static_cast<int>(state.range(0))), 0.1, Vec3(0, 0, -1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_regular_ops(cavity, kM));
  }
}
BENCHMARK(BM_AssembleRegularOps)->Arg(1)->Arg(2);

void BM_SolveTrace(benchmark::State& state) {
  const TriangleMesh cavity =
      place_cavity(icosphere(static_cast<int>(state.range(0))), 0.05, Vec3(0, 0, -1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_trace(cavity, kM, 1.0));
  }
}
BENCHMARK(BM_SolveTrace)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
