#include <benchmark/benchmark.h>

#include "altgraph/autgroup.hpp"
#include "altgraph/cayley.hpp"
#include "altgraph/extremal.hpp"
#include "altgraph/group.hpp"
#include "altgraph/permutation.hpp"
#include "altgraph/refinement.hpp"
#include "altgraph/spectral.hpp"

using namespace altgraph;

static void BM_EvenDerangements(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_even_derangements(n));
}
BENCHMARK(BM_EvenDerangements)->DenseRange(5, 8);

static void BM_BuildGraph(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_even_derangement_graph(n));
}
BENCHMARK(BM_BuildGraph)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_MaterializeTensorSquare(benchmark::State& state) {
  auto oracle = tensor_power_oracle(5, 2);
  for (auto _ : state) benchmark::DoNotOptimize(materialize(oracle));
}
BENCHMARK(BM_MaterializeTensorSquare)->Unit(benchmark::kMillisecond);

static void BM_Jacobi(benchmark::State& state) {
  auto m = DenseSymMatrix::from_graph(build_even_derangement_graph(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_symmetric(m));
}
BENCHMARK(BM_Jacobi)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_SchreierSims(benchmark::State& state) {
  ProductGroup group(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  std::vector<PointPermutation> gens;
  for (const auto& a : claimed_generators(group)) gens.push_back(a.map);
  for (auto _ : state) benchmark::DoNotOptimize(schreier_sims(gens));
}
BENCHMARK(BM_SchreierSims)->Args({5, 1})->Args({6, 1})->Args({5, 2})->Unit(benchmark::kMillisecond);

static void BM_MaxIndependentSets(benchmark::State& state) {
  auto g = build_even_derangement_graph(5);
  for (auto _ : state) benchmark::DoNotOptimize(max_independent_sets_exact(g, std::size_t{12}));
}
BENCHMARK(BM_MaxIndependentSets)->Unit(benchmark::kMillisecond);

static void BM_MaxClique(benchmark::State& state) {
  auto g = build_even_derangement_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(max_clique_exact(g));
}
BENCHMARK(BM_MaxClique)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_IndividualizationRefinement(benchmark::State& state) {
  auto g = build_even_derangement_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(g));
}
BENCHMARK(BM_IndividualizationRefinement)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_CoverScan(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cover_characterization_check(5, q));
}
BENCHMARK(BM_CoverScan)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
