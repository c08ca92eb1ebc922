#include "lapsep/canonical.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace lapsep {

namespace {

// Pair (i,j), i < j, in column order.
inline int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

struct CanonSearch {
  int n;
  int total_bits;
  const Eigen::MatrixXd* adj;
  std::uint64_t best;
  std::vector<int> perm;
  std::vector<bool> used;

  std::uint64_t bit(int index) const { return 1ull << (total_bits - 1 - index); }

  std::uint64_t prefix_mask(int determined) const {
    if (determined <= 0) return 0;
    if (determined >= total_bits) return ~0ull >> (64 - total_bits);
    return (~0ull >> (64 - total_bits)) & ~((1ull << (total_bits - determined)) - 1);
  }

  void search(int k, std::uint64_t partial) {
    if (k == n) {
      if (partial < best) best = partial;
      return;
    }
    // Try candidates with the smallest new column bits first; the minimum is
    // reached early and the prefix bound prunes hard afterwards.
    std::pair<std::uint64_t, int> order[16];
    int count = 0;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      std::uint64_t next = partial;
      for (int i = 0; i < k; ++i)
        if ((*adj)(perm[i], v) != 0.0) next |= bit(pair_index(i, k));
      order[count++] = {next, v};
    }
    std::sort(order, order + count);
    const std::uint64_t mask = prefix_mask((k + 1) * k / 2);
    for (int c = 0; c < count; ++c) {
      const auto [next, v] = order[c];
      if ((next & mask) > (best & mask)) break;
      used[v] = true;
      perm[k] = v;
      search(k + 1, next);
      used[v] = false;
    }
  }
};

}  // namespace

std::uint64_t graph_bits(const Graph& g) {
  if (g.size() > 11) throw TooLargeError("bit keys support n <= 11");
  if (!g.is_unweighted())
    throw NonBinaryWeightsError("bit keys require an unweighted graph");
  const int total = g.size() * (g.size() - 1) / 2;
  std::uint64_t bits = 0;
  for (int j = 1; j < g.size(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.weight(i, j) != 0.0) bits |= 1ull << (total - 1 - pair_index(i, j));
  return bits;
}

Graph graph_from_bits(std::uint64_t bits, int n) {
  const int total = n * (n - 1) / 2;
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((bits >> (total - 1 - pair_index(i, j))) & 1ull) g.add_edge(i, j);
  return g;
}

std::uint64_t canonical_key(const Graph& g) {
  const int n = g.size();
  if (n > 11) throw TooLargeError("canonical keys support n <= 11");
  if (n == 1) return 0;
  CanonSearch cs;
  cs.n = n;
  cs.total_bits = n * (n - 1) / 2;
  cs.adj = &g.adjacency();
  cs.best = graph_bits(g);
  cs.perm.assign(n, -1);
  cs.used.assign(n, false);
  cs.search(0, 0);
  return cs.best;
}

}  // namespace lapsep
