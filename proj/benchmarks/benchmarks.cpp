#include <benchmark/benchmark.h>

#include <random>

#include "lapsep/canonical.hpp"
#include "lapsep/entanglement.hpp"
#include "lapsep/graph6.hpp"
#include "lapsep/graph_products.hpp"
#include "lapsep/labeling.hpp"

using namespace lapsep;

namespace {

Graph circulant9() {
  Graph g(9);
  for (int v = 0; v < 9; ++v) {
    g.add_edge(v, (v + 1) % 9);
    g.add_edge(v, (v + 2) % 9);
  }
  return g;
}

void BM_reduced_labelings_2x4(benchmark::State& state) {
  const DimVector dims{2, 4};
  for (auto _ : state) benchmark::DoNotOptimize(reduced_labelings(dims));
}
BENCHMARK(BM_reduced_labelings_2x4);

void BM_degree_criterion_9(benchmark::State& state) {
  const Graph g = circulant9();
  const DimVector dims{3, 3};
  for (auto _ : state)
    benchmark::DoNotOptimize(degree_criterion_multipartite(g, dims));
}
BENCHMARK(BM_degree_criterion_9);

void BM_ppt_min_eigenvalue_16(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Graph g(16);
  std::bernoulli_distribution edge(0.4);
  for (int i = 0; i < 16; ++i)
    for (int j = i + 1; j < 16; ++j)
      if (edge(rng)) g.add_edge(i, j);
  const DensityMatrix rho = laplacian_density(g);
  const DimVector dims{4, 4};
  const Bipartition split = Bipartition::factor_vs_rest(0, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(ppt_min_eigenvalue(rho, dims, split));
}
BENCHMARK(BM_ppt_min_eigenvalue_16);

void BM_product_certificate(benchmark::State& state) {
  const std::vector<Graph> factors{complete_graph(3), complete_graph(4)};
  const ProductMask strong = ProductMask::named("strong");
  for (auto _ : state)
    benchmark::DoNotOptimize(product_laplacian_certificate(strong, factors));
}
BENCHMARK(BM_product_certificate);

void BM_canonical_key_9(benchmark::State& state) {
  const Graph g = circulant9();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_canonical_key_9);

void BM_graph6_roundtrip(benchmark::State& state) {
  const std::string line = graph6_encode(circulant9());
  for (auto _ : state) benchmark::DoNotOptimize(graph6_decode(line));
}
BENCHMARK(BM_graph6_roundtrip);

}  // namespace

BENCHMARK_MAIN();
