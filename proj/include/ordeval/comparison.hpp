#pragma once

#include <string>
#include <vector>

#include "ordeval/baselines.hpp"
#include "ordeval/index.hpp"

namespace ordeval {

// One model's evaluation on a test set. Keeps the full IndexReport so
// downstream reporting can show per-class integrals, weights and K without
// recomputing; suite.index and suite.normalized_index come from it.
struct ModelEvaluation {
    std::string model_name;
    MetricSuite suite;
    IndexReport report;
};

ModelEvaluation evaluate_model(std::string name, const EvaluationSet& set);

enum class Orientation { LowerIsBetter, HigherIsBetter };

struct MetricColumn {
    std::string metric;
    Orientation orientation;
    std::vector<int> ranks;  // aligned with RankingTable::model_names, 1 = best
};

struct RankingTable {
    std::vector<std::string> model_names;
    std::vector<MetricColumn> columns;  // fixed order: index, normalized_index,
                                        // auc, accuracy, mse
    const MetricColumn& column(const std::string& metric) const;
};

// Values within this absolute distance share a rank. Metric values live in
// [0, (M-1)^2]-scale ranges, so 1e-9 separates everything except genuinely
// equal results computed along different arithmetic paths.
inline constexpr double kRankTieTolerance = 1e-9;

// Competition (min-rank) ranking per metric: ties share the smallest rank.
// Lower is better for index, normalized index and MSE; higher is better for
// AUC and accuracy. Throws DuplicateNameError on repeated model names.
RankingTable rank_models(const std::vector<ModelEvaluation>& evaluations);

// Ranks one metric column on its own; exposed for testing and reuse.
std::vector<int> rank_values(const std::vector<double>& values,
                             Orientation orientation);

} // namespace ordeval
