// ordeval: evaluate and rank ordinal-classification models.
//
// Subcommands: evaluate, compare, simulate, plot. Exit codes: 0 success,
// 2 malformed input or configuration, 1 internal error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ordeval/comparison.hpp"
#include "ordeval/csv.hpp"
#include "ordeval/report.hpp"
#include "ordeval/simulation.hpp"
#include "ordeval/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitBadInput = 2;

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ordeval::ParseError(
            fmt::format("{}: cannot open for writing", path.string()));
    }
    out << content;
}

std::string model_name_from_path(const std::filesystem::path& path,
                                 std::map<std::string, int>& used) {
    std::string stem = path.stem().string();
    if (stem.empty()) stem = path.string();
    const int count = ++used[stem];
    return count == 1 ? stem : fmt::format("{}#{}", stem, count);
}

int run_evaluate(const std::string& input, const std::string& json_out,
                 const std::string& model_name) {
    const ordeval::EvaluationSet set = ordeval::read_prediction_file(input);
    const std::string name =
        model_name.empty() ? std::filesystem::path(input).stem().string() : model_name;
    const std::vector<ordeval::ModelEvaluation> evaluations = {
        ordeval::evaluate_model(name, set)};

    std::cout << ordeval::report_text(evaluations, std::nullopt, /*show_internals=*/true);
    if (!json_out.empty()) {
        write_text_file(json_out, ordeval::report_json(evaluations, std::nullopt));
    }
    return kExitOk;
}

int run_compare(const std::vector<std::string>& inputs, const std::string& json_out) {
    std::vector<ordeval::ModelEvaluation> evaluations;
    std::map<std::string, int> used_names;
    std::optional<std::vector<ordeval::Label>> reference_labels;
    std::size_t reference_classes = 0;
    std::string reference_file;

    for (const std::string& input : inputs) {
        const ordeval::EvaluationSet set = ordeval::read_prediction_file(input);
        if (!reference_labels) {
            reference_labels = set.labels();
            reference_classes = set.n_classes();
            reference_file = input;
        } else {
            if (set.n_classes() != reference_classes) {
                throw ordeval::LabelMismatchError(
                    fmt::format("{} has M = {} but {} has M = {}", input,
                                set.n_classes(), reference_file, reference_classes));
            }
            if (set.labels() != *reference_labels) {
                throw ordeval::LabelMismatchError(fmt::format(
                    "label column of {} differs from {}", input, reference_file));
            }
        }
        evaluations.push_back(ordeval::evaluate_model(
            model_name_from_path(input, used_names), set));
    }

    const ordeval::RankingTable rankings = ordeval::rank_models(evaluations);
    std::cout << ordeval::report_text(evaluations, rankings, /*show_internals=*/false);
    if (!json_out.empty()) {
        write_text_file(json_out, ordeval::report_json(evaluations, rankings));
    }
    return kExitOk;
}

int run_simulate(std::size_t n, std::uint64_t seed, std::size_t folds,
                 const std::string& models_flag, const std::string& json_out,
                 const std::string& dataset_out, std::size_t knn_k) {
    const ordeval::Dataset dataset = ordeval::generate_dataset({n, seed});
    const ordeval::CvConfig cv{folds, seed};

    std::map<std::string, ordeval::Classifier> roster;
    roster["knn"] = [knn_k](const ordeval::Dataset& train, const ordeval::Matrix& query) {
        return ordeval::knn_classifier(train, knn_k, query);
    };
    roster["gauss"] = ordeval::gaussian_classconditional_classifier;
    roster["majority"] = ordeval::majority_baseline;

    std::vector<ordeval::ModelEvaluation> evaluations;
    std::string token;
    std::istringstream list(models_flag);
    while (std::getline(list, token, ',')) {
        const auto it = roster.find(token);
        if (it == roster.end()) {
            throw ordeval::ConfigError(fmt::format(
                "unknown model '{}' (available: knn, gauss, majority)", token));
        }
        evaluations.push_back(ordeval::evaluate_model(
            token, ordeval::kfold_cv(dataset, it->second, cv)));
    }
    if (evaluations.empty()) {
        throw ordeval::ConfigError("--models named no model");
    }

    const ordeval::RankingTable rankings = ordeval::rank_models(evaluations);
    std::cout << ordeval::report_text(evaluations, rankings, /*show_internals=*/false);
    if (!json_out.empty()) {
        write_text_file(json_out, ordeval::report_json(evaluations, rankings));
    }
    if (!dataset_out.empty()) {
        ordeval::write_dataset_file(dataset_out, dataset);
    }
    return kExitOk;
}

int run_plot(const std::string& input, const std::string& output) {
    const ordeval::EvaluationSet set = ordeval::read_prediction_file(input);
    const ordeval::SortedClassification sc =
        ordeval::build_classification_function(set);
    write_text_file(output, ordeval::render_step_function_svg(sc));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ordinal-classification model evaluation and ranking"};
    app.require_subcommand(1);

    std::string eval_input, eval_json, eval_name;
    CLI::App* evaluate =
        app.add_subcommand("evaluate", "Score one prediction file (CSV p1..pM,label)");
    evaluate->add_option("input", eval_input, "prediction CSV file")->required();
    evaluate->add_option("--json", eval_json, "write a JSON report to this path");
    evaluate->add_option("--model", eval_name, "model name used in the report");

    std::vector<std::string> cmp_inputs;
    std::string cmp_json;
    CLI::App* compare = app.add_subcommand(
        "compare", "Score and rank several prediction files sharing one label column");
    compare->add_option("inputs", cmp_inputs, "two or more prediction CSV files")
        ->expected(2, -1)
        ->required();
    compare->add_option("--json", cmp_json, "write a JSON report to this path");

    std::size_t sim_n = 1500;
    std::uint64_t sim_seed = 0;
    std::size_t sim_folds = 10;
    std::size_t sim_knn_k = 5;
    std::string sim_models = "knn,gauss,majority";
    std::string sim_json, sim_dataset;
    CLI::App* simulate = app.add_subcommand(
        "simulate", "Generate synthetic ordinal data and cross-validate classifiers");
    simulate->add_option("--n", sim_n, "observations (>= 50, divisible by 5)");
    simulate->add_option("--seed", sim_seed, "RNG seed");
    simulate->add_option("--folds", sim_folds, "cross-validation folds");
    simulate->add_option("--models", sim_models, "comma list from: knn, gauss, majority");
    simulate->add_option("--knn-k", sim_knn_k, "neighbors for the kNN model");
    simulate->add_option("--out", sim_json, "write a JSON report to this path");
    simulate->add_option("--dataset-csv", sim_dataset, "also export the dataset as CSV");

    std::string plot_input, plot_output;
    CLI::App* plot = app.add_subcommand(
        "plot", "Render the classification and perfect-classification step functions");
    plot->add_option("input", plot_input, "prediction CSV file")->required();
    plot->add_option("output", plot_output, "SVG output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*evaluate) return run_evaluate(eval_input, eval_json, eval_name);
        if (*compare) return run_compare(cmp_inputs, cmp_json);
        if (*simulate) {
            return run_simulate(sim_n, sim_seed, sim_folds, sim_models, sim_json,
                                sim_dataset, sim_knn_k);
        }
        if (*plot) return run_plot(plot_input, plot_output);
        return kExitBadInput;
    } catch (const ordeval::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
