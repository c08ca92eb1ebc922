#pragma once

#include <json.hpp>
#include <utility>

#include "lapsep/decomposition.hpp"
#include "lapsep/entanglement.hpp"
#include "lapsep/experiments.hpp"
#include "lapsep/labeling.hpp"

namespace lapsep {

/// Labeling file: {"dims": [p1,...], "labeling": [[i1,...,im], ...]} with
/// 1-indexed coordinates.
nlohmann::json labeling_to_json(const VertexLabeling& lab, const DimVector& dims);
std::pair<DimVector, VertexLabeling> labeling_from_json(const nlohmann::json& j);

/// Factor groups are reported 1-indexed.
nlohmann::json split_to_json(const Bipartition& split);

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json certificate_to_json(const SeparableCertificate& cert);
nlohmann::json census_to_json(const LabelingCensus& census);
nlohmann::json outcome_to_json(const GraphOutcome& outcome, const DimVector& dims);

}  // namespace lapsep
