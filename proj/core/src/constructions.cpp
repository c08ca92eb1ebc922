#include "lapsep/constructions.hpp"

#include <algorithm>
#include <vector>

namespace lapsep {

namespace {

// Partial assignment onto a pv x pw grid, bipartite view of the full grid.
struct GridAssign {
  int pv, pw;
  std::vector<int> cell_of_vertex;  // -1 while unassigned
  std::vector<int> vertex_at_cell;  // -1 while empty

  GridAssign(int v, int w, int n)
      : pv(v), pw(w), cell_of_vertex(n, -1), vertex_at_cell(n, -1) {}

  int cell(int a, int b) const { return a * pw + b; }

  void pin(int vertex, int a, int b) {
    const int c = cell(a, b);
    if (cell_of_vertex[vertex] != -1 || vertex_at_cell[c] != -1)
      throw Error("internal: conflicting grid assignment");
    cell_of_vertex[vertex] = c;
    vertex_at_cell[c] = vertex;
  }

  void swap_vertices(int u, int v) {
    std::swap(cell_of_vertex[u], cell_of_vertex[v]);
    vertex_at_cell[cell_of_vertex[u]] = u;
    vertex_at_cell[cell_of_vertex[v]] = v;
  }

  // Remaining vertices fill the free cells in lexicographic order.
  void finalize() {
    int c = 0;
    for (int v = 0; v < static_cast<int>(cell_of_vertex.size()); ++v) {
      if (cell_of_vertex[v] != -1) continue;
      while (vertex_at_cell[c] != -1) ++c;
      cell_of_vertex[v] = c;
      vertex_at_cell[c] = v;
    }
  }
};

std::vector<int> neighbors(const Graph& g, int v) {
  std::vector<int> out;
  for (int u = 0; u < g.size(); ++u)
    if (u != v && g.adjacent(v, u)) out.push_back(u);
  return out;
}

int min_degree_vertex(const Graph& g) {
  int w = 0;
  for (int v = 1; v < g.size(); ++v)
    if (g.degree(v) < g.degree(w)) w = v;
  return w;
}

// Bipartite grid coordinates (a,b) mapped onto the full multi-index: `axis`
// carries a when axis_is_v, b otherwise; the remaining factors decode the
// other coordinate row-major.
VertexLabeling to_full_labeling(const GridAssign& grid, const DimVector& dims,
                                int axis, bool axis_is_v) {
  std::vector<int> rest;
  for (int k = 0; k < dims.factors(); ++k)
    if (k != axis) rest.push_back(dims.dim(k));
  const int n = dims.product();
  std::vector<MultiIndex> map(n);
  for (int v = 0; v < n; ++v) {
    const int c = grid.cell_of_vertex[v];
    const int a = c / grid.pw;
    const int b = c % grid.pw;
    const int axis_digit = axis_is_v ? a : b;
    int rest_digit = axis_is_v ? b : a;
    MultiIndex idx(dims.factors());
    idx[axis] = axis_digit + 1;
    for (int k = dims.factors() - 1; k >= 0; --k) {
      if (k == axis) continue;
      const int p = dims.dim(k);
      idx[k] = rest_digit % p + 1;
      rest_digit /= p;
    }
    map[v] = std::move(idx);
  }
  return VertexLabeling(std::move(map), dims);
}

void check_analysis_input(const Graph& g, const DimVector& dims, int i) {
  if (dims.product() != g.size())
    throw DimensionMismatchError("dims product does not match the vertex count");
  if (i < 0 || i >= dims.factors()) throw OutOfRangeError("factor index out of range");
  if (!g.is_unweighted())
    throw PreconditionUnmetError("construction requires an unweighted graph");
}

// All constructions verify their own postcondition: the proofs have case
// analyses that are easy to mis-implement, so a bad labeling must fail loudly.
void require_degree_failure(const Graph& g, const DimVector& dims,
                            const VertexLabeling& lab) {
  const Graph canonical = apply_labeling(g, lab, dims);
  if (!degree_criterion_multipartite(canonical, dims))
    throw Error("internal: constructed labeling does not break the degree criterion");
}

// Minimum-degree vertex at (0,0), neighbors along row 0, one pivot edge moved
// where the partial transpose must create a new edge. Requires d < pw - 1.
GridAssign min_degree_grid(const Graph& g, int pv, int pw) {
  const int n = g.size();
  const int w = min_degree_vertex(g);
  const int d = static_cast<int>(g.degree(w));
  GridAssign grid(pv, pw, n);
  grid.pin(w, 0, 0);
  const std::vector<int> nw = neighbors(g, w);
  for (int t = 0; t < d; ++t) grid.pin(nw[t], 0, t + 1);

  std::vector<bool> in_closed(n, false);
  in_closed[w] = true;
  for (int u : nw) in_closed[u] = true;

  int u = -1;
  for (int v = 0; v < n; ++v)
    if (!in_closed[v] && g.degree(v) > 0) {
      u = v;
      break;
    }
  if (u == -1) throw Error("internal: no outside vertex with positive degree");

  int outside_neighbor = -1, inside_neighbor = -1;
  for (int y : neighbors(g, u)) {
    if (!in_closed[y] && outside_neighbor == -1) outside_neighbor = y;
    if (in_closed[y] && y != w && inside_neighbor == -1) inside_neighbor = y;
  }
  if (outside_neighbor != -1) {
    grid.pin(u, 0, pw - 1);
    grid.pin(outside_neighbor, 1, 0);
  } else {
    grid.pin(u, 1, 0);  // its neighbor already sits in row 0
    (void)inside_neighbor;
  }
  grid.finalize();
  return grid;
}

// Neighbors split between row 0 (set A, pw - 2 vertices) and column 0
// (set B); case analysis on a neighbor of the (1,0) vertex. Requires
// pw > 2 and pw - 1 <= d < pv + pw - 2.
GridAssign general_grid(const Graph& g, int pv, int pw) {
  const int n = g.size();
  const int w = min_degree_vertex(g);
  const int d = static_cast<int>(g.degree(w));
  GridAssign grid(pv, pw, n);
  grid.pin(w, 0, 0);
  const std::vector<int> nw = neighbors(g, w);
  const int a_count = pw - 2;
  const int b_count = d - a_count;
  std::vector<int> a_set(nw.begin(), nw.begin() + a_count);
  std::vector<int> b_set(nw.begin() + a_count, nw.end());
  for (int t = 0; t < a_count; ++t) grid.pin(a_set[t], 0, t + 1);
  for (int t = 0; t < b_count; ++t) grid.pin(b_set[t], t + 1, 0);

  const int b1 = b_set[0];
  int z = -1;
  for (int y : neighbors(g, b1))
    if (y != w) {
      z = y;
      break;
    }
  if (z == -1) throw Error("internal: column vertex has no second neighbor");

  const bool in_a = std::find(a_set.begin(), a_set.end(), z) != a_set.end();
  const bool in_b = std::find(b_set.begin(), b_set.end(), z) != b_set.end();
  if (in_b) {
    grid.swap_vertices(z, a_set.front());  // reduces to the row-0 case
  } else if (!in_a) {
    grid.pin(z, 0, pw - 1);
  }
  grid.finalize();
  return grid;
}

}  // namespace

VertexLabeling entangling_labeling_min_degree(const Graph& g, const DimVector& dims,
                                              int i) {
  check_analysis_input(g, dims, i);
  if (g.is_trivial()) throw TrivialGraphError("graph has no edges");
  const int pv = dims.dim(i);
  const int pw = g.size() / pv;
  if (!(g.min_degree() < pw - 1))
    throw PreconditionUnmetError("min degree bound fails for this factor");
  const VertexLabeling lab = to_full_labeling(min_degree_grid(g, pv, pw), dims, i, true);
  require_degree_failure(g, dims, lab);
  return lab;
}

VertexLabeling entangling_labeling_general(const Graph& g, const DimVector& dims,
                                           int i) {
  check_analysis_input(g, dims, i);
  if (g.is_trivial()) throw TrivialGraphError("graph has no edges");
  const int n = g.size();
  if (n <= 4) throw PreconditionUnmetError("construction needs n > 4");
  const int p = dims.dim(i);
  const int q = n / p;
  const int d = static_cast<int>(g.min_degree());
  if (!(d < p + q - 2))
    throw PreconditionUnmetError("min degree bound fails for this factor");

  // Orient the grid so the neighbor row has length > 2.
  const bool axis_is_v = q > 2;
  const int pv = axis_is_v ? p : q;
  const int pw = axis_is_v ? q : p;
  if (pw <= 2) throw PreconditionUnmetError("both grouped dimensions are 2");

  const GridAssign grid =
      d < pw - 1 ? min_degree_grid(g, pv, pw) : general_grid(g, pv, pw);
  const VertexLabeling lab = to_full_labeling(grid, dims, i, axis_is_v);
  require_degree_failure(g, dims, lab);
  return lab;
}

VertexLabeling entangling_labeling_max_degree(const Graph& g, const DimVector& dims,
                                              int i) {
  check_analysis_input(g, dims, i);
  if (g.is_complete()) throw CompleteGraphError("complete graphs have no such labeling");
  const int n = g.size();
  const int p = dims.dim(i);
  const int q = n / p;
  const double dmax = g.max_degree();
  const Graph gc = complement(g);
  VertexLabeling lab = [&] {
    if (dmax > n - q) return entangling_labeling_min_degree(gc, dims, i);
    if (n > 4 && dmax > n - p - q + 1) return entangling_labeling_general(gc, dims, i);
    throw PreconditionUnmetError("max degree bound fails for this factor");
  }();
  // The criterion status is shared by a graph and its complement.
  require_degree_failure(g, dims, lab);
  return lab;
}

VertexLabeling bipartite_entangling_labeling(int r, const DimVector& dims) {
  if (dims.factors() != 2)
    throw NotBipartiteDimsError("construction needs exactly two factors");
  const int n = dims.product();
  if (n <= 4) throw PreconditionUnmetError("construction needs n > 4");
  if (r <= 0 || r >= n) throw PreconditionUnmetError("split must be nontrivial");

  const Graph g = complete_bipartite_graph(r, n - r);

  // Normalize: pin the smaller side, orient the grid by the smaller factor.
  const int s = std::min(r, n - r);
  const int pinned_start = (r <= n - r) ? 0 : r;
  const int other_start = (r <= n - r) ? r : 0;
  const bool axis_is_v = dims.dim(0) <= dims.dim(1);
  const int axis = axis_is_v ? 0 : 1;
  const int pv = std::min(dims.dim(0), dims.dim(1));
  const int pw = std::max(dims.dim(0), dims.dim(1));

  VertexLabeling lab = [&]() -> VertexLabeling {
    if (s < pv) return VertexLabeling::identity(dims);  // entangled for all labelings
    GridAssign grid(pv, pw, n);
    if (s == pv) {
      grid.pin(pinned_start, 0, 1);
      for (int t = 1; t < s; ++t) grid.pin(pinned_start + t, t, 0);
      grid.pin(other_start, 0, 0);
      grid.pin(other_start + 1, 0, 2);
    } else {
      for (int t = 0; t < pv; ++t) grid.pin(pinned_start + t, t, 0);
      for (int t = 0; t < pw - 1; ++t) grid.pin(other_start + t, 0, t + 1);
    }
    grid.finalize();
    return to_full_labeling(grid, dims, axis, true);
  }();
  require_degree_failure(g, dims, lab);
  return lab;
}

VertexLabeling bipartite_separable_labeling(int r, const DimVector& dims) {
  if (dims.factors() != 2)
    throw NotBipartiteDimsError("construction needs exactly two factors");
  const int n = dims.product();
  if (r <= 0 || r >= n) throw PreconditionUnmetError("split must be nontrivial");
  const int p2 = dims.dim(1);
  if (r % p2 != 0)
    throw PreconditionUnmetError("side size is not a multiple of the second factor");

  // Whole second-factor fibers: side A occupies the first r/p2 rows, which is
  // exactly the identity labeling of K_{r,n-r}.
  const VertexLabeling lab = VertexLabeling::identity(dims);
  const Graph g = complete_bipartite_graph(r, n - r);
  const Verdict v = verdict(g, dims, lab);
  if (v.status != Status::Separable)
    throw Error("internal: block labeling did not yield a separable verdict");
  return lab;
}

}  // namespace lapsep
