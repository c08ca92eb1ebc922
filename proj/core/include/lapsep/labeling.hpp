#pragma once

#include <functional>
#include <initializer_list>
#include <random>
#include <vector>

#include "lapsep/errors.hpp"
#include "lapsep/graph.hpp"

namespace lapsep {

/// Ordered factorization (p1,...,pm) of the vertex count, every factor >= 2.
/// Labeling and analysis operations require at least two factors; separable
/// certificates may carry a single one.
class DimVector {
 public:
  DimVector(std::initializer_list<int> dims) : DimVector(std::vector<int>(dims)) {}
  explicit DimVector(std::vector<int> dims);

  int factors() const { return static_cast<int>(dims_.size()); }
  int dim(int k) const;
  int product() const;
  const std::vector<int>& dims() const { return dims_; }

  bool operator==(const DimVector& other) const = default;

 private:
  std::vector<int> dims_;
};

/// 1-based grid coordinates, one entry per factor.
using MultiIndex = std::vector<int>;

/// Row-major mixed-radix bijection between vertex indices and grid cells;
/// the last factor varies fastest, decode(0) == (1,...,1).
int encode(const MultiIndex& idx, const DimVector& dims);
MultiIndex decode(int vertex, const DimVector& dims);

/// Bijection from the n vertices onto the full multi-index grid.
class VertexLabeling {
 public:
  VertexLabeling(std::vector<MultiIndex> map, const DimVector& dims);
  static VertexLabeling identity(const DimVector& dims);

  int size() const { return static_cast<int>(map_.size()); }
  const MultiIndex& at(int v) const;
  const std::vector<MultiIndex>& map() const { return map_; }

  /// cell_of[v] = encode(at(v), dims)
  std::vector<int> cells(const DimVector& dims) const;

  bool operator==(const VertexLabeling& other) const = default;

 private:
  explicit VertexLabeling(std::vector<MultiIndex> map) : map_(std::move(map)) {}
  std::vector<MultiIndex> map_;
};

/// Split of the factor positions {0,...,m-1} into two nonempty groups.
struct Bipartition {
  std::vector<int> left;
  std::vector<int> right;

  static Bipartition factor_vs_rest(int factor, int m);
};

/// Permutes the adjacency into canonical grid order: vertex k of the result
/// carries the structure of the vertex that lab maps to decode(k).
Graph apply_labeling(const Graph& g, const VertexLabeling& lab, const DimVector& dims);

/// Matrix partial transpose across the split: indices of the right-hand
/// factor group are transposed.
Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& m, const DimVector& dims,
                                  const Bipartition& split);

/// {(u,v),(w,y)} is an edge of g iff {(u,y),(w,v)} is an edge of the result,
/// with u,w the grouped-left and v,y the grouped-right coordinates. Expects g
/// in canonical grid order. An involution that preserves total edge weight.
Graph partial_transpose_graph(const Graph& g, const DimVector& dims,
                              const Bipartition& split);

/// Enumerates vertex labelings in lexicographic order over the cell
/// assignment; with reduced=true only canonical representatives modulo
/// within-factor relabelings and equal-dimension factor swaps are visited.
/// Returning false from the callback stops the enumeration.
void for_each_labeling(const DimVector& dims, bool reduced,
                       const std::function<bool(const VertexLabeling&)>& fn);

std::vector<VertexLabeling> reduced_labelings(const DimVector& dims);

VertexLabeling random_labeling(const DimVector& dims, std::mt19937_64& rng);

}  // namespace lapsep
