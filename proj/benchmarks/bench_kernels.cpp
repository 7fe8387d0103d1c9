#include <benchmark/benchmark.h>

#include "halfbem/kelvin.hpp"
#include "halfbem/mindlin.hpp"

using namespace halfbem;

namespace {

const ElasticModuli kM = moduli_from_poisson(0.25, 1.0);

void BM_Kelvin(benchmark::State& state) {
  const Vec3 x(0.3, -0.7, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kelvin(x, kM));
  }
}
BENCHMARK(BM_Kelvin);

void BM_KelvinGrad(benchmark::State& state) {
  const Vec3 x(0.3, -0.7, 0.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kelvin_grad(x, kM));
  }
}
BENCHMARK(BM_KelvinGrad);

void BM_KelvinTraction(benchmark::State& state) {
  const Vec3 x(0.3, -0.7, 0.2);
  const Vec3 n = Vec3(1, 1, 1).normalized();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kelvin_traction(x, n, kM));
  }
}
BENCHMARK(BM_KelvinTraction);

void BM_RegularPart(benchmark::State& state) {
  const Vec3 x(0.3, -0.7, -0.9);
  const Vec3 y(-0.2, 0.1, -1.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(regular_part(x, y, kM));
  }
}
BENCHMARK(BM_RegularPart);

void BM_RegularTraction(benchmark::State& state) {
  const Vec3 x(0.3, -0.7, -0.9);
  const Vec3 y(-0.2, 0.1, -1.2);
  const Vec3 n = Vec3(0, 1, -1).normalized();
  for (auto _ : state) {
    benchmark::DoNotOptimize(regular_traction(x, n, y, kM));
  }
}
BENCHMARK(BM_RegularTraction);

void BM_Neumann(benchmark::State& state) {
  const Vec3 x(0.3, -0.7, -0.9);
  const Vec3 y(-0.2, 0.1, -1.2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(neumann(x, y, kM));
  }
}
BENCHMARK(BM_Neumann);

}  // namespace

BENCHMARK_MAIN();
