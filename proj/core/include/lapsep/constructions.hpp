#pragma once

#include "lapsep/entanglement.hpp"
#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"

namespace lapsep {

/// Labeling that makes the degree criterion fail across factor i vs the rest,
/// for a nontrivial unweighted graph with min degree < n/p_i - 1. Places the
/// minimum-degree vertex at (1,...,1) and its neighbors along the grouped
/// axis. The failure is verified before returning.
VertexLabeling entangling_labeling_min_degree(const Graph& g, const DimVector& dims,
                                              int i);

/// As above under the weaker bound min degree < p_i + n/p_i - 2, n > 4.
/// Splits the neighbors between the first row and the first column and then
/// follows a three-way case analysis on the second column vertex. Falls back
/// to the min-degree construction when it applies.
VertexLabeling entangling_labeling_general(const Graph& g, const DimVector& dims,
                                           int i);

/// Complement route: for noncomplete g with max degree > n - n/p_i (or the
/// weaker > n - p_i - n/p_i + 1, n > 4), builds the labeling on the
/// complement; the degree criterion fails for g under the same labeling.
VertexLabeling entangling_labeling_max_degree(const Graph& g, const DimVector& dims,
                                              int i);

/// Labeling under which K_{r,n-r} fails the degree criterion, for any
/// nontrivial split with n > 4. Vertices 0..r-1 form one side. Sides and
/// factors are normalized internally so the pinned side is the smaller one.
VertexLabeling bipartite_entangling_labeling(int r, const DimVector& dims);

/// Block labeling assigning side A of K_{r,n-r} to whole second-factor
/// fibers; requires r divisible by p2. The resulting verdict is Separable
/// (verified before returning).
VertexLabeling bipartite_separable_labeling(int r, const DimVector& dims);

}  // namespace lapsep
