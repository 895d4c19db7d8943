#include "ordeval/comparison.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

namespace ordeval {

ModelEvaluation evaluate_model(std::string name, const EvaluationSet& set) {
    ModelEvaluation evaluation;
    evaluation.model_name = std::move(name);
    evaluation.report = ordinal_index(set);

    const std::vector<Label> predicted = argmax_predict(set);
    evaluation.suite.index = evaluation.report.index_value;
    evaluation.suite.normalized_index = evaluation.report.normalized_value;
    evaluation.suite.accuracy = accuracy(predicted, set.labels());
    evaluation.suite.mse = mse(predicted, set.labels());
    evaluation.suite.auc = auc_multiclass(set);
    return evaluation;
}

std::vector<int> rank_values(const std::vector<double>& values,
                             Orientation orientation) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (values[a] != values[b]) {
            return orientation == Orientation::LowerIsBetter ? values[a] < values[b]
                                                             : values[a] > values[b];
        }
        return a < b;
    });

    std::vector<int> ranks(n, 0);
    int group_rank = 1;
    double group_head = 0.0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const double v = values[order[pos]];
        if (pos == 0 || std::abs(v - group_head) > kRankTieTolerance) {
            group_rank = static_cast<int>(pos) + 1;
            group_head = v;
        }
        ranks[order[pos]] = group_rank;
    }
    return ranks;
}

const MetricColumn& RankingTable::column(const std::string& metric) const {
    for (const MetricColumn& c : columns) {
        if (c.metric == metric) return c;
    }
    throw ShapeError(fmt::format("no ranking column named '{}'", metric));
}

RankingTable rank_models(const std::vector<ModelEvaluation>& evaluations) {
    if (evaluations.empty()) {
        throw ShapeError("nothing to rank: no model evaluations");
    }
    std::unordered_set<std::string> seen;
    RankingTable table;
    for (const ModelEvaluation& e : evaluations) {
        if (e.model_name.empty()) {
            throw DuplicateNameError("model name must be non-empty");
        }
        if (!seen.insert(e.model_name).second) {
            throw DuplicateNameError(
                fmt::format("duplicate model name '{}'", e.model_name));
        }
        table.model_names.push_back(e.model_name);
    }

    const auto add_column = [&](const std::string& metric, Orientation orientation,
                                auto getter) {
        std::vector<double> values;
        values.reserve(evaluations.size());
        for (const ModelEvaluation& e : evaluations) values.push_back(getter(e.suite));
        table.columns.push_back({metric, orientation, rank_values(values, orientation)});
    };

    add_column("index", Orientation::LowerIsBetter,
               [](const MetricSuite& s) { return s.index; });
    add_column("normalized_index", Orientation::LowerIsBetter,
               [](const MetricSuite& s) { return s.normalized_index; });
    add_column("auc", Orientation::HigherIsBetter,
               [](const MetricSuite& s) { return s.auc; });
    add_column("accuracy", Orientation::HigherIsBetter,
               [](const MetricSuite& s) { return s.accuracy; });
    add_column("mse", Orientation::LowerIsBetter,
               [](const MetricSuite& s) { return s.mse; });
    return table;
}

} // namespace ordeval
