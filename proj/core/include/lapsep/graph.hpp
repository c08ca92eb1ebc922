#pragma once

#include <Eigen/Dense>
#include <iosfwd>

#include "lapsep/errors.hpp"

namespace lapsep {

/// Undirected weighted graph on 0-indexed vertices. The adjacency matrix is
/// symmetric with zero diagonal and weights in [0,1]; a graph with no edges
/// is "trivial".
class Graph {
 public:
  explicit Graph(int n);
  static Graph from_adjacency(Eigen::MatrixXd adj);

  int size() const { return static_cast<int>(adj_.rows()); }
  double weight(int u, int v) const;
  bool adjacent(int u, int v) const { return weight(u, v) > 0.0; }
  void add_edge(int u, int v, double w = 1.0);

  const Eigen::MatrixXd& adjacency() const { return adj_; }

  double degree(int v) const;
  double min_degree() const;
  double max_degree() const;
  double total_weight() const;
  int edge_count() const;

  bool is_unweighted() const;
  bool is_trivial() const;
  bool is_complete() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  Eigen::MatrixXd adj_;
};

/// Unweighted complement J - I - A. Errors with NonBinaryWeights on weighted
/// input.
Graph complement(const Graph& g);

/// L = D - A with D the diagonal of vertex degrees. Row sums are zero and L
/// is row diagonally dominant.
Eigen::MatrixXd laplacian(const Graph& g);

/// r(A): diagonal matrix of row sums.
Eigen::MatrixXd row_sum_diag(const Eigen::MatrixXd& m);

Graph complete_graph(int n);
Graph complete_bipartite_graph(int r, int s);
Graph star_graph(int n);  // K_{1,n-1} with the center at vertex 0
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph disjoint_union(const Graph& a, const Graph& b);

/// Edge-list text format: one edge per line, "u v" or "u v w" with 0-indexed
/// endpoints and w in [0,1]; lines starting with '#' are ignored. When n < 0
/// the vertex count is max endpoint + 1.
Graph read_edge_list(std::istream& in, int n = -1);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace lapsep
