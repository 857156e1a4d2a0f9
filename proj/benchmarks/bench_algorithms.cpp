#include <benchmark/benchmark.h>

#include "pairclust/gen.hpp"
#include "pairclust/graph.hpp"
#include "pairclust/metrics.hpp"
#include "pairclust/rgca.hpp"
#include "pairclust/saca.hpp"

namespace {

using namespace pairclust;

void BM_Saca(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::uint64_t>(state.range(1));
  const Clustering truth = planted_clustering_balanced(n, std::max<std::size_t>(1, n / 1000), 1);
  const TrainingSet s = sample_training_set(truth, m, 2);
  for (auto _ : state) benchmark::DoNotOptimize(saca(n, s));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * m));
}
BENCHMARK(BM_Saca)->Args({10'000, 50'000})->Args({1'000'000, 5'000'000})->Unit(benchmark::kMillisecond);

void BM_RgcaDense(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Clustering truth = planted_clustering_balanced(n, 2, 3);
  const SimilarityGraph p = perturb_similarity(truth, n * n / 100, 4);
  for (auto _ : state) benchmark::DoNotOptimize(rgca(p));
}
BENCHMARK(BM_RgcaDense)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_RgcaThreads(benchmark::State& state) {
  const Clustering truth = planted_clustering_balanced(1000, 4, 5);
  const SimilarityGraph p = perturb_similarity(truth, 10'000, 6);
  RgcaOptions options;
  options.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rgca(p, kDefaultDistanceParameter, options));
}
BENCHMARK(BM_RgcaThreads)->Arg(1)->Arg(2)->Arg(4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_EdgeResistances(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SideInfoGraph g = random_connected_graph(n, 4.0 / static_cast<double>(n), 7);
  ResistanceOptions options;
  options.dense_limit = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(edge_resistances(g, options));
  state.counters["edges"] = static_cast<double>(g.edge_count());
}
BENCHMARK(BM_EdgeResistances)
    ->Args({200, 2000})
    ->Args({200, 0})
    ->Args({1000, 2000})
    ->Args({1000, 0})
    ->Unit(benchmark::kMillisecond);

void BM_SpanningTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SideInfoGraph g = random_connected_graph(n, 4.0 / static_cast<double>(n), 8);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_spanning_tree(g, seed++));
}
BENCHMARK(BM_SpanningTree)->Arg(100)->Arg(10'000);

void BM_MisclassificationError(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const Clustering d = planted_clustering_balanced(100'000, k, 9);
  const Clustering c = planted_clustering_balanced(100'000, k, 10);
  for (auto _ : state) benchmark::DoNotOptimize(misclassification_error(c, d));
}
BENCHMARK(BM_MisclassificationError)->Arg(8)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_HammingDistance(benchmark::State& state) {
  const Clustering d = planted_clustering_balanced(2000, 8, 11);
  const SimilarityGraph p = perturb_similarity(d, 20'000, 12);
  for (auto _ : state) benchmark::DoNotOptimize(hamming_distance(p, d));
}
BENCHMARK(BM_HammingDistance)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
