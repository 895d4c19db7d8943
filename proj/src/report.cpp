#include "ordeval/report.hpp"

#include <fmt/format.h>

#include <json.hpp>

namespace ordeval {

std::string report_json(const std::vector<ModelEvaluation>& evaluations,
                        const std::optional<RankingTable>& rankings) {
    nlohmann::json root;
    root["schema_version"] = 1;

    nlohmann::json models = nlohmann::json::array();
    for (const ModelEvaluation& e : evaluations) {
        nlohmann::json m;
        m["model"] = e.model_name;
        m["index"] = e.suite.index;
        m["normalized_index"] = e.suite.normalized_index;
        m["accuracy"] = e.suite.accuracy;
        m["mse"] = e.suite.mse;
        m["auc"] = e.suite.auc;
        m["k_max"] = e.report.max_value;
        m["class_integrals"] = e.report.class_integrals;
        m["weights"] = e.report.weights;
        models.push_back(std::move(m));
    }
    root["models"] = std::move(models);

    if (rankings) {
        nlohmann::json ranks;
        for (const MetricColumn& column : rankings->columns) {
            nlohmann::json per_model;
            for (std::size_t i = 0; i < rankings->model_names.size(); ++i) {
                per_model[rankings->model_names[i]] = column.ranks[i];
            }
            ranks[column.metric] = std::move(per_model);
        }
        root["rankings"] = std::move(ranks);
    }
    return root.dump(2) + "\n";
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

} // namespace

std::string report_text(const std::vector<ModelEvaluation>& evaluations,
                        const std::optional<RankingTable>& rankings,
                        bool show_internals) {
    std::size_t name_width = 5;
    for (const ModelEvaluation& e : evaluations) {
        name_width = std::max(name_width, e.model_name.size());
    }

    std::string out;
    out += fmt::format("{}  {:>8}  {:>10}  {:>8}  {:>8}  {:>8}\n",
                       pad("Model", name_width), "Index", "NormIndex", "AUC",
                       "Accuracy", "MSE");
    for (const ModelEvaluation& e : evaluations) {
        out += fmt::format("{}  {:>8.3f}  {:>10.3f}  {:>8.3f}  {:>8.3f}  {:>8.3f}\n",
                           pad(e.model_name, name_width), e.suite.index,
                           e.suite.normalized_index, e.suite.auc, e.suite.accuracy,
                           e.suite.mse);
    }

    if (show_internals) {
        for (const ModelEvaluation& e : evaluations) {
            out += fmt::format("\n{}: K = {:.6g}, I = {:.6g}, I_n = {:.6g}\n",
                               e.model_name, e.report.max_value, e.report.index_value,
                               e.report.normalized_value);
            out += "  class  integral  weight\n";
            for (std::size_t j = 0; j < e.report.class_integrals.size(); ++j) {
                out += fmt::format("  {:>5}  {:>8.4f}  {:>6.4f}\n", j + 1,
                                   e.report.class_integrals[j], e.report.weights[j]);
            }
        }
    }

    if (rankings) {
        out += fmt::format("\nRanks (1 = best)\n{}", pad("Model", name_width));
        for (const MetricColumn& column : rankings->columns) {
            out += fmt::format("  {:>16}", column.metric);
        }
        out += "\n";
        for (std::size_t i = 0; i < rankings->model_names.size(); ++i) {
            out += pad(rankings->model_names[i], name_width);
            for (const MetricColumn& column : rankings->columns) {
                out += fmt::format("  {:>16}", column.ranks[i]);
            }
            out += "\n";
        }
    }
    return out;
}

} // namespace ordeval
