#include "lapsep/graph.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

namespace lapsep {

namespace {

bool is_binary(double w) { return w == 0.0 || w == 1.0; }

}  // namespace

Graph::Graph(int n) {
  if (n <= 0) throw OutOfRangeError("vertex count must be positive");
  adj_ = Eigen::MatrixXd::Zero(n, n);
}

Graph Graph::from_adjacency(Eigen::MatrixXd adj) {
  if (adj.rows() != adj.cols() || adj.rows() == 0)
    throw DimensionMismatchError("adjacency matrix must be square and nonempty");
  const int n = static_cast<int>(adj.rows());
  for (int i = 0; i < n; ++i) {
    if (adj(i, i) != 0.0) throw Error("adjacency diagonal must be zero");
    for (int j = i + 1; j < n; ++j) {
      if (adj(i, j) != adj(j, i)) throw Error("adjacency matrix must be symmetric");
      if (adj(i, j) < 0.0 || adj(i, j) > 1.0)
        throw Error("edge weights must lie in [0,1]");
    }
  }
  Graph g(n);
  g.adj_ = std::move(adj);
  return g;
}

double Graph::weight(int u, int v) const {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw OutOfRangeError("vertex index out of range");
  return adj_(u, v);
}

void Graph::add_edge(int u, int v, double w) {
  if (u < 0 || v < 0 || u >= size() || v >= size())
    throw OutOfRangeError("vertex index out of range");
  if (u == v) throw Error("self-loops are not supported");
  if (w < 0.0 || w > 1.0) throw Error("edge weights must lie in [0,1]");
  adj_(u, v) = w;
  adj_(v, u) = w;
}

double Graph::degree(int v) const {
  if (v < 0 || v >= size()) throw OutOfRangeError("vertex index out of range");
  return adj_.row(v).sum();
}

double Graph::min_degree() const {
  double d = degree(0);
  for (int v = 1; v < size(); ++v) d = std::min(d, degree(v));
  return d;
}

double Graph::max_degree() const {
  double d = degree(0);
  for (int v = 1; v < size(); ++v) d = std::max(d, degree(v));
  return d;
}

double Graph::total_weight() const { return adj_.sum() / 2.0; }

int Graph::edge_count() const {
  int count = 0;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adj_(i, j) != 0.0) ++count;
  return count;
}

bool Graph::is_unweighted() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (!is_binary(adj_(i, j))) return false;
  return true;
}

bool Graph::is_trivial() const { return adj_.sum() == 0.0; }

bool Graph::is_complete() const {
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adj_(i, j) != 1.0) return false;
  return true;
}

Graph complement(const Graph& g) {
  if (!g.is_unweighted())
    throw NonBinaryWeightsError("complement requires an unweighted graph");
  const int n = g.size();
  Eigen::MatrixXd adj = Eigen::MatrixXd::Ones(n, n) - Eigen::MatrixXd::Identity(n, n) -
                        g.adjacency();
  return Graph::from_adjacency(std::move(adj));
}

Eigen::MatrixXd laplacian(const Graph& g) {
  return row_sum_diag(g.adjacency()) - g.adjacency();
}

Eigen::MatrixXd row_sum_diag(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.rows(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) d(i, i) = m.row(i).sum();
  return d;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite_graph(int r, int s) {
  Graph g(r + s);
  for (int i = 0; i < r; ++i)
    for (int j = r; j < r + s; ++j) g.add_edge(i, j);
  return g;
}

Graph star_graph(int n) { return complete_bipartite_graph(1, n - 1); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  Graph g = path_graph(n);
  if (n > 2) g.add_edge(n - 1, 0);
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.size() + b.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.weight(i, j) != 0.0) g.add_edge(i, j, a.weight(i, j));
  for (int i = 0; i < b.size(); ++i)
    for (int j = i + 1; j < b.size(); ++j)
      if (b.weight(i, j) != 0.0)
        g.add_edge(a.size() + i, a.size() + j, b.weight(i, j));
  return g;
}

Graph read_edge_list(std::istream& in, int n) {
  struct Edge {
    int u, v;
    double w;
  };
  std::vector<Edge> edges;
  int max_vertex = -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    Edge e{-1, -1, 1.0};
    if (!(ls >> e.u >> e.v))
      throw Error("edge list parse error at line " + std::to_string(lineno));
    double w;
    if (ls >> w) e.w = w;
    std::string rest;
    if (ls >> rest)
      throw Error("edge list parse error at line " + std::to_string(lineno));
    if (e.u < 0 || e.v < 0)
      throw Error("negative vertex index at line " + std::to_string(lineno));
    max_vertex = std::max(max_vertex, std::max(e.u, e.v));
    edges.push_back(e);
  }
  const int count = n >= 0 ? n : max_vertex + 1;
  if (count <= 0) throw Error("edge list defines no vertices");
  if (max_vertex >= count)
    throw DimensionMismatchError("edge endpoint exceeds vertex count");
  Graph g(count);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.w);
  return g;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto saved = out.precision(17);
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j) {
      const double w = g.weight(i, j);
      if (w == 0.0) continue;
      out << i << ' ' << j;
      if (w != 1.0) out << ' ' << w;
      out << '\n';
    }
  out.precision(saved);
}

}  // namespace lapsep
