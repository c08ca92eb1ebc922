#pragma once

#include <cstdint>

#include "lapsep/graph.hpp"

namespace lapsep {

/// Upper-triangle adjacency bits in column order (0,1),(0,2),(1,2),(0,3),...
/// packed so that lexicographic comparison of the bit string equals numeric
/// comparison. Unweighted graphs with n <= 11 only.
std::uint64_t graph_bits(const Graph& g);
Graph graph_from_bits(std::uint64_t bits, int n);

/// Minimum of graph_bits over all vertex permutations, computed by
/// backtracking with prefix pruning; the canonical form used for brute-force
/// isomorphism grouping of small graphs.
std::uint64_t canonical_key(const Graph& g);

}  // namespace lapsep
