#include <benchmark/benchmark.h>

#include "apls/generators.hpp"
#include "apls/hyperfinite.hpp"
#include "apls/labeling.hpp"
#include "apls/measures.hpp"
#include "apls/verifier.hpp"

using namespace apls;

namespace {

ProofLabeling grid_labeling(const BoundedDegreeGraph& g, int r) {
  const auto w = uniform_ball_witness(g, r);
  SchemeParams params;
  params.d = g.degree_bound();
  params.r = r;
  const Rational eps = check_uniformity(g, w).max_edge_l1;
  params.eps = eps;
  params.eps_prime = eps + Rational(1, 4);
  params.alpha = required_alpha(max_ball_size_actual(g, r), eps, params.eps_prime);
  const auto q = discretize_witness(g, w, eps, params.eps_prime, params.alpha);
  return build_proof(g, q, distance_coloring(g, 2 * r), params);
}

void BM_DistanceColoring(benchmark::State& state) {
  const auto n = static_cast<int>(state.range(0));
  const auto g = generate(GridSpec{n, n});
  for (auto _ : state) benchmark::DoNotOptimize(distance_coloring(g, 8));
  state.SetItemsProcessed(state.iterations() * g.num_vertices());
}
BENCHMARK(BM_DistanceColoring)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_UniformBallWitness(benchmark::State& state) {
  const auto g = generate(GridSpec{50, 50});
  const auto r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_uniformity(g, uniform_ball_witness(g, r)));
}
BENCHMARK(BM_UniformBallWitness)->Arg(4)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_VerifyPropertyA(benchmark::State& state) {
  const auto g = generate(GridSpec{30, 30});
  const auto lab = grid_labeling(g, 4);
  const auto jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_property_a(g, lab, jobs));
  state.SetItemsProcessed(state.iterations() * g.num_vertices());
}
BENCHMARK(BM_VerifyPropertyA)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_Extract(benchmark::State& state) {
  const auto g = generate(GridSpec{30, 30});
  const auto lab = grid_labeling(g, 4);
  const auto w = decode_accepted_witness(g, lab);
  const auto eps = check_uniformity(g, w).max_edge_l1;
  for (auto _ : state) benchmark::DoNotOptimize(extract_partition(g, w, eps));
}
BENCHMARK(BM_Extract)->Unit(benchmark::kMillisecond);

void BM_LocallyPlanar(benchmark::State& state) {
  const auto g = generate(GridSpec{30, 30});
  const auto K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_locally_p(g, K, Predicate::planar));
}
BENCHMARK(BM_LocallyPlanar)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
