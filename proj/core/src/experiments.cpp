#include "lapsep/experiments.hpp"

#include <map>
#include <mutex>
#include <ostream>

#include "lapsep/canonical.hpp"
#include "lapsep/constructions.hpp"
#include "lapsep/graph6.hpp"
#include "lapsep/parallel.hpp"

namespace lapsep {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::AllSeparable: return "all_separable";
    case Classification::AllEntangled: return "all_entangled";
    case Classification::Mixed: return "mixed";
  }
  return "mixed";
}

LabelingCensus all_labelings_verdict(const Graph& g, const DimVector& dims,
                                     DeciderMode mode, int jobs) {
  if (g.size() > 9) throw TooLargeError("labeling census is guarded to n <= 9");
  if (dims.product() != g.size())
    throw DimensionMismatchError("dims product does not match the vertex count");

  const std::vector<VertexLabeling> labelings = reduced_labelings(dims);
  const auto statuses = parallel_map(labelings, jobs, [&](const VertexLabeling& lab) {
    if (mode == DeciderMode::DegreeExact) {
      const Graph canonical = apply_labeling(g, lab, dims);
      return degree_criterion_multipartite(canonical, dims) ? Status::Entangled
                                                            : Status::Separable;
    }
    return verdict(g, dims, lab).status;
  });

  LabelingCensus census;
  census.total = static_cast<int>(labelings.size());
  for (std::size_t i = 0; i < statuses.size(); ++i) {
    switch (statuses[i]) {
      case Status::Separable: ++census.separable; break;
      case Status::Undecided: ++census.undecided; break;
      case Status::Entangled:
        ++census.entangled;
        if (!census.first_entangling) census.first_entangling = labelings[i];
        break;
    }
  }
  if (census.entangled == census.total)
    census.classification = Classification::AllEntangled;
  else if (census.separable == census.total)
    census.classification = Classification::AllSeparable;
  else
    census.classification = Classification::Mixed;
  return census;
}

N4Census census_n4() {
  std::map<std::uint64_t, Graph> classes;
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    const Graph g = graph_from_bits(bits, 4);
    classes.try_emplace(canonical_key(g), graph_from_bits(canonical_key(g), 4));
  }

  N4Census out;
  const DimVector dims{2, 2};
  for (const auto& [key, rep] : classes) {
    CensusClass entry;
    entry.graph6 = graph6_encode(rep);
    entry.edges = rep.edge_count();
    entry.trivial = rep.is_trivial();
    if (!entry.trivial) {
      entry.census = all_labelings_verdict(rep, dims, DeciderMode::DegreeExact);
      if (entry.census.classification == Classification::AllSeparable)
        out.all_separable.push_back(entry.graph6);
    }
    out.classes.push_back(std::move(entry));
  }
  return out;
}

namespace {

std::optional<VertexLabeling> try_constructions(const Graph& g, const DimVector& dims,
                                                std::string& method) {
  for (int i = 0; i < dims.factors(); ++i) {
    try {
      auto lab = entangling_labeling_min_degree(g, dims, i);
      method = "min_degree";
      return lab;
    } catch (const PreconditionUnmetError&) {
    }
  }
  for (int i = 0; i < dims.factors(); ++i) {
    try {
      auto lab = entangling_labeling_general(g, dims, i);
      method = "general";
      return lab;
    } catch (const PreconditionUnmetError&) {
    }
  }
  for (int i = 0; i < dims.factors(); ++i) {
    try {
      auto lab = entangling_labeling_max_degree(g, dims, i);
      method = "max_degree";
      return lab;
    } catch (const PreconditionUnmetError&) {
    } catch (const CompleteGraphError&) {
    }
  }
  return std::nullopt;
}

std::optional<VertexLabeling> search_entangling(const Graph& g, const DimVector& dims,
                                                std::string& method) {
  if (g.size() > 9) throw TooLargeError("exhaustive search is guarded to n <= 9");
  std::optional<VertexLabeling> found;
  // Degree-criterion search first; it is cheap and covers everything the
  // paper's experiments report.
  for_each_labeling(dims, true, [&](const VertexLabeling& lab) {
    const Graph canonical = apply_labeling(g, lab, dims);
    if (degree_criterion_multipartite(canonical, dims)) {
      found = lab;
      return false;
    }
    return true;
  });
  if (found) {
    method = "search";
    return found;
  }
  for_each_labeling(dims, true, [&](const VertexLabeling& lab) {
    if (verdict(g, dims, lab).status == Status::Entangled) {
      found = lab;
      return false;
    }
    return true;
  });
  if (found) method = "search_ppt";
  return found;
}

}  // namespace

std::vector<GraphOutcome> noncomplete_experiment(const std::vector<Graph>& graphs,
                                                 const DimVector& dims, int jobs,
                                                 std::ostream* progress) {
  std::mutex progress_mutex;
  return parallel_map(graphs, jobs, [&](const Graph& g) {
    GraphOutcome outcome;
    outcome.graph6 = graph6_encode(g);
    outcome.n = g.size();
    if (g.is_trivial()) {
      outcome.classification = "skipped_trivial";
    } else if (g.is_complete()) {
      outcome.classification = "skipped_complete";
    } else {
      outcome.labeling = try_constructions(g, dims, outcome.method);
      if (!outcome.labeling) outcome.labeling = search_entangling(g, dims, outcome.method);
      outcome.classification = outcome.labeling ? "entangling_found" : "none_found";
    }
    if (progress) {
      const std::lock_guard<std::mutex> lock(progress_mutex);
      (*progress) << outcome.graph6 << ": " << outcome.classification
                  << (outcome.method.empty() ? "" : " via " + outcome.method) << '\n';
    }
    return outcome;
  });
}

}  // namespace lapsep
