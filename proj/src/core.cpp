#include "ordeval/core.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numeric>

namespace ordeval {

EvaluationSet validate_evaluation_set(Matrix probabilities, std::vector<Label> labels) {
    const std::size_t n = probabilities.rows();
    const std::size_t m = probabilities.cols();

    if (n == 0) {
        throw ShapeError("evaluation set is empty (N = 0)");
    }
    if (m < 2) {
        throw ShapeError(fmt::format("need at least 2 classes, got M = {}", m));
    }
    if (labels.size() != n) {
        throw ShapeError(fmt::format("label vector length {} does not match N = {}",
                                     labels.size(), n));
    }

    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double p = probabilities(i, j);
            if (!(p >= 0.0 && p <= 1.0)) {
                throw RangeError(fmt::format(
                    "row {}: probability p[{}] = {} is outside [0, 1]", i + 1, j + 1, p));
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > kRowSumTolerance) {
            throw RowSumError(fmt::format(
                "row {}: probabilities sum to {} (must be 1 within {})", i + 1, sum,
                kRowSumTolerance));
        }
        const Label y = labels[i];
        if (y < 1 || static_cast<std::size_t>(y) > m) {
            throw RangeError(
                fmt::format("row {}: label {} is outside 1..{}", i + 1, y, m));
        }
    }

    return EvaluationSet(std::move(probabilities), std::move(labels));
}

EvaluationSet EvaluationSet::with_label(std::size_t observation, Label new_label) const {
    if (observation >= n_observations()) {
        throw ShapeError(fmt::format("observation index {} out of range (N = {})",
                                     observation, n_observations()));
    }
    if (new_label < 1 || static_cast<std::size_t>(new_label) > n_classes()) {
        throw RangeError(
            fmt::format("label {} is outside 1..{}", new_label, n_classes()));
    }
    std::vector<Label> labels = labels_;
    labels[observation] = new_label;
    return EvaluationSet(probabilities_, std::move(labels));
}

std::vector<Label> argmax_predict(const EvaluationSet& set) {
    const std::size_t n = set.n_observations();
    const std::size_t m = set.n_classes();
    std::vector<Label> predictions(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < m; ++j) {
            if (set.probabilities()(i, j) > set.probabilities()(i, best)) {
                best = j;
            }
        }
        predictions[i] = static_cast<Label>(best + 1);
    }
    return predictions;
}

std::size_t ConfusionMatrix::total() const noexcept {
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t ConfusionMatrix::row_sum(Label predicted) const {
    std::size_t sum = 0;
    for (std::size_t c = 1; c <= n_classes_; ++c) {
        sum += at(predicted, static_cast<Label>(c));
    }
    return sum;
}

std::size_t ConfusionMatrix::column_sum(Label actual) const {
    std::size_t sum = 0;
    for (std::size_t r = 1; r <= n_classes_; ++r) {
        sum += at(static_cast<Label>(r), actual);
    }
    return sum;
}

ConfusionMatrix confusion_matrix(std::span<const Label> predicted,
                                 std::span<const Label> actual,
                                 std::size_t n_classes) {
    if (predicted.size() != actual.size()) {
        throw ShapeError(fmt::format("predicted length {} != actual length {}",
                                     predicted.size(), actual.size()));
    }
    ConfusionMatrix cm(n_classes);
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const Label p = predicted[i];
        const Label a = actual[i];
        if (p < 1 || static_cast<std::size_t>(p) > n_classes || a < 1 ||
            static_cast<std::size_t>(a) > n_classes) {
            throw RangeError(fmt::format("pair ({}, {}) at position {} outside 1..{}", p,
                                         a, i + 1, n_classes));
        }
        ++cm.at(p, a);
    }
    return cm;
}

} // namespace ordeval
