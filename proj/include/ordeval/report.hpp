#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordeval/comparison.hpp"

namespace ordeval {

// Machine-readable report: schema_version 1, a "models" array of
// {model, index, normalized_index, accuracy, mse, auc, k_max,
//  class_integrals[], weights[]} objects, plus a "rankings" map when a
// ranking was computed. Serialization keeps full double precision
// (shortest round-trip form, always >= 12 significant digits when needed),
// and key order is deterministic, so identical inputs give identical bytes.
std::string report_json(const std::vector<ModelEvaluation>& evaluations,
                        const std::optional<RankingTable>& rankings);

// Human-readable aligned-column tables: a metric table (one row per model),
// per-class index internals, and the ranking table when present.
std::string report_text(const std::vector<ModelEvaluation>& evaluations,
                        const std::optional<RankingTable>& rankings,
                        bool show_internals);

} // namespace ordeval
