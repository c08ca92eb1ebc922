#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lapsep/entanglement.hpp"
#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"

namespace lapsep {

enum class Classification { AllSeparable, AllEntangled, Mixed };

std::string to_string(Classification c);

enum class DeciderMode {
  Full,        // full decision ladder
  DegreeExact  // degree criterion as an exact decider (n = 4, C^2 x C^2)
};

struct LabelingCensus {
  Classification classification = Classification::Mixed;
  int total = 0;
  int separable = 0;
  int entangled = 0;
  int undecided = 0;
  std::optional<VertexLabeling> first_entangling;
};

/// Runs the verdict over every reduced labeling and counts the outcomes.
/// Guarded to n <= 9.
LabelingCensus all_labelings_verdict(const Graph& g, const DimVector& dims,
                                     DeciderMode mode = DeciderMode::Full,
                                     int jobs = 1);

struct CensusClass {
  std::string graph6;
  int edges = 0;
  bool trivial = false;
  LabelingCensus census;  // empty for the trivial class
};

struct N4Census {
  std::vector<CensusClass> classes;          // all 11 isomorphism classes
  std::vector<std::string> all_separable;    // graph6 of the all-separable ones
};

/// Enumerates the 64 labeled graphs on four vertices, groups them by
/// brute-force canonical form, and classifies every nontrivial class in
/// C^2 x C^2 with the degree criterion as exact decider.
N4Census census_n4();

struct GraphOutcome {
  std::string graph6;
  int n = 0;
  std::string classification;  // entangling_found | none_found | skipped_*
  std::string method;          // min_degree | general | max_degree | search | search_ppt
  std::optional<VertexLabeling> labeling;
};

/// For every noncomplete nontrivial graph, finds an entangling labeling:
/// degree-threshold constructions first, exhaustive search only for graphs
/// escaping every theorem hypothesis.
std::vector<GraphOutcome> noncomplete_experiment(const std::vector<Graph>& graphs,
                                                 const DimVector& dims, int jobs = 1,
                                                 std::ostream* progress = nullptr);

}  // namespace lapsep
