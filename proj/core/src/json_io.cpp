#include "lapsep/json_io.hpp"

namespace lapsep {

using nlohmann::json;

json labeling_to_json(const VertexLabeling& lab, const DimVector& dims) {
  json j;
  j["dims"] = dims.dims();
  j["labeling"] = lab.map();
  return j;
}

std::pair<DimVector, VertexLabeling> labeling_from_json(const json& j) {
  if (!j.contains("dims") || !j.contains("labeling"))
    throw Error("labeling JSON needs \"dims\" and \"labeling\" keys");
  DimVector dims(j.at("dims").get<std::vector<int>>());
  std::vector<MultiIndex> map = j.at("labeling").get<std::vector<MultiIndex>>();
  return {dims, VertexLabeling(std::move(map), dims)};
}

json split_to_json(const Bipartition& split) {
  json j;
  auto bump = [](const std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int k : v) out.push_back(k + 1);
    return out;
  };
  j["left"] = bump(split.left);
  j["right"] = bump(split.right);
  return j;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["status"] = to_string(v.status);
  if (v.witness) {
    json w;
    w["vertex"] = v.witness->vertex;
    w["cell"] = v.witness->cell;
    w["split"] = split_to_json(v.witness->split);
    w["deg_g"] = v.witness->deg_g;
    w["deg_pt"] = v.witness->deg_pt;
    j["witness"] = std::move(w);
  }
  if (v.ppt) {
    json p;
    p["split"] = split_to_json(v.ppt->split);
    p["min_eigenvalue"] = v.ppt->min_eigenvalue;
    j["ppt"] = std::move(p);
  }
  json tests = json::array();
  for (const auto& t : v.tests) tests.push_back({{"name", t.name}, {"outcome", t.outcome}});
  j["tests"] = std::move(tests);
  return j;
}

json certificate_to_json(const SeparableCertificate& cert) {
  json j;
  j["dims"] = cert.dims.dims();
  json terms = json::array();
  for (const auto& term : cert.terms) {
    json t;
    t["weight"] = term.weight;
    json factors = json::array();
    for (const auto& f : term.factors)
      factors.push_back(std::vector<double>(f.data(), f.data() + f.size()));
    t["factors"] = std::move(factors);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["residual"] = cert.residual;
  if (!cert.meta.empty()) j["meta"] = cert.meta;
  return j;
}

json census_to_json(const LabelingCensus& census) {
  json j;
  j["classification"] = to_string(census.classification);
  j["counts"] = {{"labelings", census.total},
                 {"separable", census.separable},
                 {"entangled", census.entangled},
                 {"undecided", census.undecided}};
  return j;
}

json outcome_to_json(const GraphOutcome& outcome, const DimVector& dims) {
  json j;
  j["graph6"] = outcome.graph6;
  j["n"] = outcome.n;
  j["dims"] = dims.dims();
  j["classification"] = outcome.classification;
  if (!outcome.method.empty()) j["method"] = outcome.method;
  if (outcome.labeling) j["entangling_labeling"] = outcome.labeling->map();
  return j;
}

}  // namespace lapsep
