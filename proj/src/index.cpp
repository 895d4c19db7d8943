#include "ordeval/index.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace ordeval {

SortedClassification build_classification_function(const EvaluationSet& set) {
    const std::size_t n = set.n_observations();
    const std::size_t m = set.n_classes();
    const std::vector<Label> predicted = argmax_predict(set);

    std::vector<std::vector<std::size_t>> blocks(m);
    for (std::size_t i = 0; i < n; ++i) {
        blocks[static_cast<std::size_t>(predicted[i] - 1)].push_back(i);
    }

    SortedClassification sc;
    sc.permutation.reserve(n);
    sc.boundaries.reserve(m + 1);
    sc.boundaries.push_back(0);
    for (std::size_t j = 0; j < m; ++j) {
        auto& block = blocks[j];
        // Non-increasing predicted-class probability; ties keep original order.
        std::sort(block.begin(), block.end(), [&](std::size_t a, std::size_t b) {
            const double pa = set.probabilities()(a, j);
            const double pb = set.probabilities()(b, j);
            if (pa != pb) return pa > pb;
            return a < b;
        });
        sc.permutation.insert(sc.permutation.end(), block.begin(), block.end());
        sc.boundaries.push_back(sc.permutation.size());
    }

    sc.sorted_actual.reserve(n);
    sc.sorted_predicted.reserve(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        sc.sorted_actual.push_back(set.label(sc.permutation[pos]));
        sc.sorted_predicted.push_back(predicted[sc.permutation[pos]]);
    }
    return sc;
}

Label evaluate_step_function(const SortedClassification& sc, StepFunction which,
                             double x) {
    if (!(x >= 0.0 && x < 1.0)) {
        throw DomainError(fmt::format("x = {} is outside [0, 1)", x));
    }
    const std::size_t n = sc.n_observations();
    auto pos = static_cast<std::size_t>(x * static_cast<double>(n));
    if (pos >= n) pos = n - 1;  // guard against x*N rounding up to N
    return which == StepFunction::Model ? sc.sorted_actual[pos] : sc.sorted_predicted[pos];
}

ErrorIntervalSet error_intervals(const SortedClassification& sc) {
    const std::size_t n = sc.n_observations();
    const std::size_t m = sc.n_classes();
    ErrorIntervalSet result;
    result.per_class.resize(m);

    for (std::size_t j = 1; j <= m; ++j) {
        ErrorInterval& interval = result.per_class[j - 1];
        const std::size_t lo = sc.boundaries[j - 1];
        const std::size_t hi = sc.boundaries[j];
        interval.class_length = static_cast<double>(hi - lo) / static_cast<double>(n);
        for (std::size_t pos = lo; pos < hi; ++pos) {
            if (sc.sorted_actual[pos] != static_cast<Label>(j)) {
                interval.first_error_position = pos + 1;  // 1-based
                // e_j spans from the first error to the block end, inclusive.
                interval.error_length =
                    static_cast<double>(hi - (pos + 1) + 1) / static_cast<double>(n);
                interval.weight = interval.error_length / interval.class_length;
                break;
            }
        }
    }
    return result;
}

std::vector<double> class_integrals(const SortedClassification& sc) {
    const std::size_t n = sc.n_observations();
    const std::size_t m = sc.n_classes();
    std::vector<double> integrals(m, 0.0);
    for (std::size_t j = 1; j <= m; ++j) {
        long long total = 0;
        for (std::size_t pos = sc.boundaries[j - 1]; pos < sc.boundaries[j]; ++pos) {
            total += std::llabs(static_cast<long long>(sc.sorted_actual[pos]) -
                                static_cast<long long>(j));
        }
        integrals[j - 1] = static_cast<double>(total) / static_cast<double>(n);
    }
    return integrals;
}

double max_index(const std::vector<std::size_t>& class_sizes, std::size_t n_classes) {
    if (class_sizes.size() != n_classes) {
        throw ShapeError(fmt::format("class-size vector length {} != M = {}",
                                     class_sizes.size(), n_classes));
    }
    std::size_t n = 0;
    for (std::size_t size : class_sizes) n += size;
    if (n == 0) {
        throw DegenerateError("all classes are empty; K is undefined");
    }
    double k = 0.0;
    for (std::size_t i = 1; i <= n_classes; ++i) {
        const double length =
            static_cast<double>(class_sizes[i - 1]) / static_cast<double>(n);
        k += length * static_cast<double>(std::max(n_classes - i, i - 1));
    }
    return k;
}

IndexReport ordinal_index(const EvaluationSet& set) {
    const SortedClassification sc = build_classification_function(set);
    const ErrorIntervalSet intervals = error_intervals(sc);
    const std::size_t m = set.n_classes();

    IndexReport report;
    report.class_integrals = class_integrals(sc);
    report.weights.reserve(m);
    for (const ErrorInterval& interval : intervals.per_class) {
        report.weights.push_back(interval.weight);
    }

    double value = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        value += report.weights[j] * report.class_integrals[j];
    }
    report.index_value = value;

    std::vector<std::size_t> sizes(m);
    for (std::size_t j = 1; j <= m; ++j) {
        sizes[j - 1] = sc.block_size(static_cast<Label>(j));
    }
    report.max_value = max_index(sizes, m);
    if (report.max_value <= 0.0) {
        throw DegenerateError("K = 0; the normalized index is undefined");
    }
    report.normalized_value = report.index_value / report.max_value;
    return report;
}

double normalized_index(const EvaluationSet& set) {
    return ordinal_index(set).normalized_value;
}

EvaluationSet degrade_one_observation(const EvaluationSet& set, std::size_t observation,
                                      Label new_label) {
    if (observation >= set.n_observations()) {
        throw ShapeError(fmt::format("observation index {} out of range (N = {})",
                                     observation, set.n_observations()));
    }
    if (new_label < 1 || static_cast<std::size_t>(new_label) > set.n_classes()) {
        throw RangeError(
            fmt::format("label {} is outside 1..{}", new_label, set.n_classes()));
    }
    const std::vector<Label> predicted = argmax_predict(set);
    if (set.label(observation) != predicted[observation]) {
        throw PreconditionError(fmt::format(
            "observation {} is already misclassified (true {}, predicted {})",
            observation, set.label(observation), predicted[observation]));
    }
    if (new_label == predicted[observation]) {
        throw PreconditionError(fmt::format(
            "new label {} equals the predicted class of observation {}", new_label,
            observation));
    }
    return set.with_label(observation, new_label);
}

} // namespace ordeval
