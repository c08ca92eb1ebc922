#include "lapsep/labeling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace lapsep {

DimVector::DimVector(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw DimensionMismatchError("dimension vector is empty");
  for (int p : dims_)
    if (p < 2) throw DimensionMismatchError("every factor must be at least 2");
}

int DimVector::dim(int k) const {
  if (k < 0 || k >= factors()) throw OutOfRangeError("factor index out of range");
  return dims_[k];
}

int DimVector::product() const {
  int p = 1;
  for (int d : dims_) p *= d;
  return p;
}

int encode(const MultiIndex& idx, const DimVector& dims) {
  if (static_cast<int>(idx.size()) != dims.factors())
    throw DimensionMismatchError("multi-index length does not match factor count");
  int v = 0;
  for (int k = 0; k < dims.factors(); ++k) {
    if (idx[k] < 1 || idx[k] > dims.dim(k))
      throw OutOfRangeError("multi-index coordinate out of range");
    v = v * dims.dim(k) + (idx[k] - 1);
  }
  return v;
}

MultiIndex decode(int vertex, const DimVector& dims) {
  if (vertex < 0 || vertex >= dims.product())
    throw OutOfRangeError("vertex index out of range");
  MultiIndex idx(dims.factors());
  for (int k = dims.factors() - 1; k >= 0; --k) {
    idx[k] = vertex % dims.dim(k) + 1;
    vertex /= dims.dim(k);
  }
  return idx;
}

VertexLabeling::VertexLabeling(std::vector<MultiIndex> map, const DimVector& dims)
    : map_(std::move(map)) {
  const int n = dims.product();
  if (static_cast<int>(map_.size()) != n)
    throw DimensionMismatchError("labeling size does not match the grid");
  std::vector<bool> seen(n, false);
  for (const auto& idx : map_) {
    const int cell = encode(idx, dims);
    if (seen[cell]) throw DimensionMismatchError("labeling is not a bijection");
    seen[cell] = true;
  }
}

VertexLabeling VertexLabeling::identity(const DimVector& dims) {
  std::vector<MultiIndex> map(dims.product());
  for (int v = 0; v < dims.product(); ++v) map[v] = decode(v, dims);
  return VertexLabeling(std::move(map));
}

const MultiIndex& VertexLabeling::at(int v) const {
  if (v < 0 || v >= size()) throw OutOfRangeError("vertex index out of range");
  return map_[v];
}

std::vector<int> VertexLabeling::cells(const DimVector& dims) const {
  std::vector<int> cell_of(map_.size());
  for (int v = 0; v < size(); ++v) cell_of[v] = encode(map_[v], dims);
  return cell_of;
}

Bipartition Bipartition::factor_vs_rest(int factor, int m) {
  if (m < 2) throw DimensionMismatchError("bipartition needs at least two factors");
  if (factor < 0 || factor >= m) throw OutOfRangeError("factor index out of range");
  Bipartition split;
  split.left.push_back(factor);
  for (int k = 0; k < m; ++k)
    if (k != factor) split.right.push_back(k);
  return split;
}

namespace {

void validate_split(const DimVector& dims, const Bipartition& split) {
  const int m = dims.factors();
  if (split.left.empty() || split.right.empty())
    throw DimensionMismatchError("bipartition groups must be nonempty");
  std::vector<int> seen(m, 0);
  for (int k : split.left) {
    if (k < 0 || k >= m) throw OutOfRangeError("factor index out of range");
    ++seen[k];
  }
  for (int k : split.right) {
    if (k < 0 || k >= m) throw OutOfRangeError("factor index out of range");
    ++seen[k];
  }
  for (int k = 0; k < m; ++k)
    if (seen[k] != 1)
      throw DimensionMismatchError("bipartition must partition the factors");
}

// Grouped coordinates for one side of a split, plus the inverse map from
// (left,right) sub-index pairs back to vertex indices.
struct SplitIndex {
  std::vector<int> left_of;
  std::vector<int> right_of;
  std::vector<int> vertex_of;  // [a * right_size + b]
  int right_size = 1;

  SplitIndex(const DimVector& dims, const Bipartition& split) {
    validate_split(dims, split);
    const int n = dims.product();
    int left_size = 1;
    for (int k : split.left) left_size *= dims.dim(k);
    for (int k : split.right) right_size *= dims.dim(k);
    left_of.resize(n);
    right_of.resize(n);
    vertex_of.assign(left_size * right_size, -1);
    for (int x = 0; x < n; ++x) {
      const MultiIndex idx = decode(x, dims);
      int a = 0, b = 0;
      for (int k : split.left) a = a * dims.dim(k) + (idx[k] - 1);
      for (int k : split.right) b = b * dims.dim(k) + (idx[k] - 1);
      left_of[x] = a;
      right_of[x] = b;
      vertex_of[a * right_size + b] = x;
    }
  }

  int combine(int a, int b) const { return vertex_of[a * right_size + b]; }
};

}  // namespace

Graph apply_labeling(const Graph& g, const VertexLabeling& lab, const DimVector& dims) {
  if (dims.product() != g.size())
    throw DimensionMismatchError("dims product does not match the vertex count");
  if (lab.size() != g.size())
    throw DimensionMismatchError("labeling size does not match the graph");
  const std::vector<int> cell_of = lab.cells(dims);
  std::vector<int> vertex_at(g.size());
  for (int v = 0; v < g.size(); ++v) vertex_at[cell_of[v]] = v;
  Eigen::MatrixXd adj(g.size(), g.size());
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b)
      adj(a, b) = g.adjacency()(vertex_at[a], vertex_at[b]);
  return Graph::from_adjacency(std::move(adj));
}

Eigen::MatrixXd partial_transpose(const Eigen::MatrixXd& m, const DimVector& dims,
                                  const Bipartition& split) {
  if (m.rows() != m.cols() || m.rows() != dims.product())
    throw DimensionMismatchError("matrix size does not match dims product");
  const SplitIndex si(dims, split);
  const int n = static_cast<int>(m.rows());
  Eigen::MatrixXd out(n, n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      out(x, y) = m(si.combine(si.left_of[x], si.right_of[y]),
                    si.combine(si.left_of[y], si.right_of[x]));
  return out;
}

Graph partial_transpose_graph(const Graph& g, const DimVector& dims,
                              const Bipartition& split) {
  return Graph::from_adjacency(partial_transpose(g.adjacency(), dims, split));
}

namespace {

// Digit table: 0-based coordinate of every cell in every factor.
std::vector<std::vector<int>> cell_digits(const DimVector& dims) {
  const int n = dims.product();
  std::vector<std::vector<int>> digits(n, std::vector<int>(dims.factors()));
  for (int c = 0; c < n; ++c) {
    const MultiIndex idx = decode(c, dims);
    for (int k = 0; k < dims.factors(); ++k) digits[c][k] = idx[k] - 1;
  }
  return digits;
}

// A cell assignment is within-factor canonical iff, for every factor, the
// fibers ordered by coordinate value have strictly increasing minimum vertex.
bool within_factor_canonical(const std::vector<int>& vertex_at,
                             const std::vector<std::vector<int>>& digits,
                             const DimVector& dims) {
  for (int k = 0; k < dims.factors(); ++k) {
    std::vector<int> min_vertex(dims.dim(k), std::numeric_limits<int>::max());
    for (int c = 0; c < static_cast<int>(vertex_at.size()); ++c) {
      int& mv = min_vertex[digits[c][k]];
      mv = std::min(mv, vertex_at[c]);
    }
    for (int a = 1; a < dims.dim(k); ++a)
      if (min_vertex[a - 1] >= min_vertex[a]) return false;
  }
  return true;
}

// Relabels each factor so the fiber minima are increasing; the unique
// within-factor canonical element of the orbit.
std::vector<int> canonicalize_within_factor(const std::vector<int>& vertex_at,
                                            const std::vector<std::vector<int>>& digits,
                                            const DimVector& dims) {
  const int n = static_cast<int>(vertex_at.size());
  const int m = dims.factors();
  std::vector<std::vector<int>> relabel(m);
  for (int k = 0; k < m; ++k) {
    std::vector<int> min_vertex(dims.dim(k), std::numeric_limits<int>::max());
    for (int c = 0; c < n; ++c) {
      int& mv = min_vertex[digits[c][k]];
      mv = std::min(mv, vertex_at[c]);
    }
    std::vector<int> order(dims.dim(k));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return min_vertex[a] < min_vertex[b]; });
    relabel[k].resize(dims.dim(k));
    for (int rank = 0; rank < dims.dim(k); ++rank) relabel[k][order[rank]] = rank;
  }
  std::vector<int> out(n);
  for (int c = 0; c < n; ++c) {
    int cell = 0;
    for (int k = 0; k < m; ++k)
      cell = cell * dims.dim(k) + relabel[k][digits[c][k]];
    out[cell] = vertex_at[c];
  }
  return out;
}

// Factor permutations preserving the dimension profile, identity excluded.
std::vector<std::vector<int>> factor_symmetries(const DimVector& dims) {
  const int m = dims.factors();
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  while (std::next_permutation(perm.begin(), perm.end())) {
    bool ok = true;
    for (int k = 0; k < m; ++k)
      if (dims.dim(perm[k]) != dims.dim(k)) ok = false;
    if (ok) out.push_back(perm);
  }
  return out;
}

// Moves factor k's coordinate to position sigma[k]; valid because the
// dimensions agree.
std::vector<int> permute_factors(const std::vector<int>& vertex_at,
                                 const std::vector<std::vector<int>>& digits,
                                 const DimVector& dims, const std::vector<int>& sigma) {
  const int n = static_cast<int>(vertex_at.size());
  const int m = dims.factors();
  std::vector<int> out(n);
  std::vector<int> new_digit(m);
  for (int c = 0; c < n; ++c) {
    for (int k = 0; k < m; ++k) new_digit[sigma[k]] = digits[c][k];
    int cell = 0;
    for (int k = 0; k < m; ++k) cell = cell * dims.dim(k) + new_digit[k];
    out[cell] = vertex_at[c];
  }
  return out;
}

}  // namespace

void for_each_labeling(const DimVector& dims, bool reduced,
                       const std::function<bool(const VertexLabeling&)>& fn) {
  if (dims.factors() < 2)
    throw DimensionMismatchError("labelings need at least two factors");
  const int n = dims.product();
  const auto digits = cell_digits(dims);
  const auto symmetries = reduced ? factor_symmetries(dims) : std::vector<std::vector<int>>{};
  std::vector<int> vertex_at(n);
  std::iota(vertex_at.begin(), vertex_at.end(), 0);
  do {
    if (reduced) {
      if (!within_factor_canonical(vertex_at, digits, dims)) continue;
      bool minimal = true;
      for (const auto& sigma : symmetries) {
        const auto image = canonicalize_within_factor(
            permute_factors(vertex_at, digits, dims, sigma), digits, dims);
        if (image < vertex_at) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
    }
    std::vector<MultiIndex> map(n);
    for (int c = 0; c < n; ++c) map[vertex_at[c]] = decode(c, dims);
    if (!fn(VertexLabeling(std::move(map), dims))) return;
  } while (std::next_permutation(vertex_at.begin(), vertex_at.end()));
}

std::vector<VertexLabeling> reduced_labelings(const DimVector& dims) {
  std::vector<VertexLabeling> out;
  for_each_labeling(dims, true, [&](const VertexLabeling& lab) {
    out.push_back(lab);
    return true;
  });
  return out;
}

VertexLabeling random_labeling(const DimVector& dims, std::mt19937_64& rng) {
  const int n = dims.product();
  std::vector<int> cell_of(n);
  std::iota(cell_of.begin(), cell_of.end(), 0);
  std::shuffle(cell_of.begin(), cell_of.end(), rng);
  std::vector<MultiIndex> map(n);
  for (int v = 0; v < n; ++v) map[v] = decode(cell_of[v], dims);
  return VertexLabeling(std::move(map), dims);
}

}  // namespace lapsep
