#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapsep/decomposition.hpp"
#include "lapsep/density.hpp"
#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"

namespace lapsep {

enum class Status { Separable, Entangled, Undecided };

std::string to_string(Status s);

/// First vertex whose degree changes under the partial transpose.
struct DegreeWitness {
  int vertex = -1;       // vertex id (grid cell for canonical graphs)
  MultiIndex cell;       // its grid coordinates
  Bipartition split;
  double deg_g = 0.0;
  double deg_pt = 0.0;
};

struct PptRecord {
  Bipartition split;
  double min_eigenvalue = 0.0;
};

struct TestRecord {
  std::string name;
  std::string outcome;
};

struct Verdict {
  Status status = Status::Undecided;
  std::optional<DegreeWitness> witness;
  std::optional<PptRecord> ppt;
  std::optional<SeparableCertificate> certificate;
  std::vector<TestRecord> tests;
};

/// Necessary condition for separability across the split: every vertex keeps
/// its degree in the partial transpose graph. Exact comparison for unweighted
/// graphs, 1e-12 tolerance otherwise. Returns the first violation, or nullopt
/// on pass; a violation witnesses entanglement.
std::optional<DegreeWitness> degree_criterion(const Graph& g, const DimVector& dims,
                                              const Bipartition& split);

/// Runs the degree criterion over all single-factor-vs-rest splits.
std::optional<DegreeWitness> degree_criterion_multipartite(const Graph& g,
                                                           const DimVector& dims);

/// Minimum eigenvalue of the matrix partial transpose across the split; a
/// value below -1e-10 witnesses entanglement (Peres-Horodecki).
double ppt_min_eigenvalue(const DensityMatrix& rho, const DimVector& dims,
                          const Bipartition& split);

/// Sufficient condition for separability in two factors: between any two
/// rows, the edge counts from matching cells agree in both directions.
/// Requires exactly two factors and an unweighted graph in grid order.
bool edge_count_sufficient(const Graph& g, const DimVector& dims);

/// Decision ladder: degree criterion, then PPT on all single-vs-rest splits,
/// then the two-factor sufficiency rules. Undecided is a first-class outcome.
Verdict verdict(const Graph& g, const DimVector& dims);
Verdict verdict(const Graph& g, const DimVector& dims, const VertexLabeling& lab);

}  // namespace lapsep
