#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ordeval/errors.hpp"
#include "ordeval/matrix.hpp"

namespace ordeval {

// Ordinal class label, 1-based: a value in {1, ..., M}. The enclosing
// problem's M is carried by EvaluationSet / ConfusionMatrix, which enforce
// the range at their validation gates.
using Label = int;

// Absolute tolerance for probability-row sums. Rows are never renormalized:
// rescaling would change within-class orderings, so off-sum rows are rejected.
inline constexpr double kRowSumTolerance = 1e-6;

// A validated N x M probability matrix with the true ordinal labels.
// Immutable after construction; safe to share across threads.
class EvaluationSet {
public:
    std::size_t n_observations() const noexcept { return probabilities_.rows(); }
    std::size_t n_classes() const noexcept { return probabilities_.cols(); }

    const Matrix& probabilities() const noexcept { return probabilities_; }
    // Probability that observation i (0-based) belongs to class j (1-based).
    double probability(std::size_t i, Label j) const {
        return probabilities_(i, static_cast<std::size_t>(j - 1));
    }
    std::span<const double> row(std::size_t i) const { return probabilities_.row(i); }

    Label label(std::size_t i) const { return labels_[i]; }
    const std::vector<Label>& labels() const noexcept { return labels_; }

    // Copy with one true label replaced; probabilities (and thus predictions)
    // are untouched. The new label must be in range.
    EvaluationSet with_label(std::size_t observation, Label new_label) const;

    friend EvaluationSet validate_evaluation_set(Matrix probabilities,
                                                 std::vector<Label> labels);

private:
    EvaluationSet(Matrix probabilities, std::vector<Label> labels)
        : probabilities_(std::move(probabilities)), labels_(std::move(labels)) {}

    Matrix probabilities_;
    std::vector<Label> labels_;
};

// The single validation gate for model output. Throws ShapeError, RangeError
// or RowSumError; never repairs the input.
EvaluationSet validate_evaluation_set(Matrix probabilities, std::vector<Label> labels);

// M x M matrix of counts; entry (predicted, actual) with 1-based classes,
// matching the confusion-table orientation rows = predicted, columns = actual.
class ConfusionMatrix {
public:
    ConfusionMatrix(std::size_t n_classes)
        : n_classes_(n_classes), counts_(n_classes * n_classes, 0) {}

    std::size_t n_classes() const noexcept { return n_classes_; }

    std::size_t at(Label predicted, Label actual) const {
        return counts_[idx(predicted, actual)];
    }
    std::size_t& at(Label predicted, Label actual) { return counts_[idx(predicted, actual)]; }

    std::size_t total() const noexcept;
    std::size_t row_sum(Label predicted) const;   // # observations predicted as this class
    std::size_t column_sum(Label actual) const;   // # observations actually in this class

    bool operator==(const ConfusionMatrix&) const = default;

private:
    std::size_t idx(Label predicted, Label actual) const {
        return static_cast<std::size_t>(predicted - 1) * n_classes_ +
               static_cast<std::size_t>(actual - 1);
    }

    std::size_t n_classes_;
    std::vector<std::size_t> counts_;
};

// Hard prediction for every observation: the smallest class index attaining
// the row maximum (deterministic, order-independent tie-break).
std::vector<Label> argmax_predict(const EvaluationSet& set);

ConfusionMatrix confusion_matrix(std::span<const Label> predicted,
                                 std::span<const Label> actual,
                                 std::size_t n_classes);

} // namespace ordeval
