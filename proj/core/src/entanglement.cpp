#include "lapsep/entanglement.hpp"

#include <cmath>

namespace lapsep {

namespace {

constexpr double kWeightedDegreeTol = 1e-12;

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Separable: return "Separable";
    case Status::Entangled: return "Entangled";
    case Status::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::optional<DegreeWitness> degree_criterion(const Graph& g, const DimVector& dims,
                                              const Bipartition& split) {
  if (dims.product() != g.size())
    throw DimensionMismatchError("dims product does not match the vertex count");
  const Graph pt = partial_transpose_graph(g, dims, split);
  const bool exact = g.is_unweighted();
  for (int v = 0; v < g.size(); ++v) {
    const double dg = g.degree(v);
    const double dp = pt.degree(v);
    const bool differs = exact ? dg != dp : std::abs(dg - dp) > kWeightedDegreeTol;
    if (differs) {
      DegreeWitness w;
      w.vertex = v;
      w.cell = decode(v, dims);
      w.split = split;
      w.deg_g = dg;
      w.deg_pt = dp;
      return w;
    }
  }
  return std::nullopt;
}

std::optional<DegreeWitness> degree_criterion_multipartite(const Graph& g,
                                                           const DimVector& dims) {
  for (int i = 0; i < dims.factors(); ++i) {
    auto w = degree_criterion(g, dims, Bipartition::factor_vs_rest(i, dims.factors()));
    if (w) return w;
  }
  return std::nullopt;
}

double ppt_min_eigenvalue(const DensityMatrix& rho, const DimVector& dims,
                          const Bipartition& split) {
  if (dims.product() != rho.dim())
    throw DimensionMismatchError("dims product does not match the matrix size");
  return min_eigenvalue(partial_transpose(rho.matrix(), dims, split));
}

bool edge_count_sufficient(const Graph& g, const DimVector& dims) {
  if (dims.factors() != 2)
    throw NotBipartiteDimsError("edge-count sufficiency needs exactly two factors");
  if (dims.product() != g.size())
    throw DimensionMismatchError("dims product does not match the vertex count");
  if (!g.is_unweighted())
    throw NonBinaryWeightsError("edge-count sufficiency requires an unweighted graph");
  const int p = dims.dim(0);
  const int q = dims.dim(1);
  const auto& adj = g.adjacency();
  const auto cell = [q](int i, int k) { return i * q + k; };
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      for (int k = 0; k < q; ++k) {
        double from_i = 0.0, from_j = 0.0;
        for (int y = 0; y < q; ++y) {
          from_i += adj(cell(i, k), cell(j, y));
          from_j += adj(cell(j, k), cell(i, y));
        }
        if (from_i != from_j) return false;
      }
  return true;
}

Verdict verdict(const Graph& g, const DimVector& dims) {
  if (dims.product() != g.size())
    throw DimensionMismatchError("dims product does not match the vertex count");
  if (dims.factors() < 2)
    throw DimensionMismatchError("analysis needs at least two factors");

  Verdict v;
  const DensityMatrix rho = laplacian_density(g);  // ZeroTrace for trivial graphs

  if (auto w = degree_criterion_multipartite(g, dims)) {
    v.status = Status::Entangled;
    v.witness = std::move(w);
    v.tests.push_back({"degree_criterion", "fail"});
    return v;
  }
  v.tests.push_back({"degree_criterion", "pass"});

  for (int i = 0; i < dims.factors(); ++i) {
    const auto split = Bipartition::factor_vs_rest(i, dims.factors());
    const double e = ppt_min_eigenvalue(rho, dims, split);
    if (e < -kPsdTol) {
      v.status = Status::Entangled;
      v.ppt = PptRecord{split, e};
      v.tests.push_back({"ppt", "fail"});
      return v;
    }
  }
  v.tests.push_back({"ppt", "pass"});

  if (dims.factors() == 2 && g.is_unweighted()) {
    if (edge_count_sufficient(g, dims)) {
      v.status = Status::Separable;
      v.tests.push_back({"edge_count_sufficient", "holds"});
      return v;
    }
    v.tests.push_back({"edge_count_sufficient", "fails"});
  }

  // PPT is also sufficient for Laplacian density matrices in C^2 x C^q, and
  // all splits already passed above.
  if (dims.factors() == 2 && (dims.dim(0) == 2 || dims.dim(1) == 2)) {
    v.status = Status::Separable;
    v.tests.push_back({"ppt_sufficient_2xq", "holds"});
    return v;
  }

  v.status = Status::Undecided;
  return v;
}

Verdict verdict(const Graph& g, const DimVector& dims, const VertexLabeling& lab) {
  Verdict v = verdict(apply_labeling(g, lab, dims), dims);
  if (v.witness) {
    // Map the witness back to the original vertex id.
    const std::vector<int> cell_of = lab.cells(dims);
    for (int u = 0; u < g.size(); ++u)
      if (cell_of[u] == v.witness->vertex) {
        v.witness->vertex = u;
        break;
      }
  }
  return v;
}

}  // namespace lapsep
