#include <benchmark/benchmark.h>

#include "symcrit/driver.hpp"
#include "symcrit/io.hpp"

namespace {

using namespace symcrit;

ProblemInstance sphere_instance() {
  PrimeField f(65521);
  PolyRingPtr x = make_x_ring(f, 3);
  MPoly f1 = MPoly::from_list(
      x, {{1, {2, 0, 0}}, {1, {0, 2, 0}}, {1, {0, 0, 2}}, {-6, {0, 0, 0}}});
  MPoly phi = MPoly::from_list(x, {{1, {1, 1, 1}},
                                   {-3, {1, 0, 0}},
                                   {-3, {0, 1, 0}},
                                   {-3, {0, 0, 1}}});
  return ProblemInstance({f1}, phi);
}

void BM_sphere_per_orbit(benchmark::State& state) {
  ProblemInstance prob = sphere_instance();
  for (auto _ : state)
    benchmark::DoNotOptimize(critical_points_per_orbit(prob, 1));
}
BENCHMARK(BM_sphere_per_orbit)->Unit(benchmark::kMillisecond);

void BM_sphere_naive(benchmark::State& state) {
  ProblemInstance prob = sphere_instance();
  for (auto _ : state)
    benchmark::DoNotOptimize(naive_critical_points(prob, 1));
}
BENCHMARK(BM_sphere_naive)->Unit(benchmark::kMillisecond);

void BM_random_per_orbit_n4(benchmark::State& state) {
  ProblemInstance prob =
      random_instance(PrimeField(65521), 4, int(state.range(0)), 4, 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(critical_points_per_orbit(prob, 1));
}
BENCHMARK(BM_random_per_orbit_n4)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_symmetrize_row(benchmark::State& state) {
  PrimeField f(65521);
  PolyRingPtr x = make_x_ring(f, 6);
  Rng rng(5);
  MPoly g = random_invariant(x, 5, rng);
  Partition lambda = Partition::from_parts({1, 2, 3});
  BlockRing br(f, lambda);
  std::vector<MPoly> row;
  for (int i = 0; i < lambda.length(); ++i)
    row.push_back(t_lambda(br, g.derivative(br.x_rep_of_slot(i))));
  for (auto _ : state) {
    EquivariantRow er(br, row);
    benchmark::DoNotOptimize(symmetrize(er));
  }
}
BENCHMARK(BM_symmetrize_row)->Unit(benchmark::kMicrosecond);

void BM_bounds_table(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bounds_report(8, 6, 3));
}
BENCHMARK(BM_bounds_table)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
