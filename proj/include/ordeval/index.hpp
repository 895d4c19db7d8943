#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ordeval/core.hpp"

namespace ordeval {

// Observations grouped by predicted class (blocks in class order 1..M) and,
// within each block, sorted by the predicted-class probability in
// non-increasing order with a stable tie-break on the original index.
//
// This induces two piecewise-constant functions on [0, 1):
//   f_mod   — the true label of the observation covering each 1/N slot,
//   f_exact — the predicted class, i.e. the constant j on the j-th block.
struct SortedClassification {
    // sorted position (0-based) -> original observation index (0-based)
    std::vector<std::size_t> permutation;
    // cumulative block ends: boundaries[0] = 0, boundaries[j] = n_j, boundaries[M] = N
    std::vector<std::size_t> boundaries;
    std::vector<Label> sorted_actual;     // f_mod step values
    std::vector<Label> sorted_predicted;  // f_exact step values (block-constant)

    std::size_t n_observations() const noexcept { return permutation.size(); }
    std::size_t n_classes() const noexcept { return boundaries.size() - 1; }
    std::size_t block_size(Label j) const {
        return boundaries[static_cast<std::size_t>(j)] -
               boundaries[static_cast<std::size_t>(j - 1)];
    }
};

SortedClassification build_classification_function(const EvaluationSet& set);

enum class StepFunction { Model, Exact };

// Value of f_mod or f_exact at x in [0, 1). Throws DomainError outside.
Label evaluate_step_function(const SortedClassification& sc, StepFunction which,
                             double x);

// Per-class error interval: the span from the first misclassified observation
// of the block (in sorted order) to the block's end.
struct ErrorInterval {
    // 1-based global sorted position of the first misclassification in the
    // block, if any.
    std::optional<std::size_t> first_error_position;
    double error_length = 0.0;  // e_j, as a fraction of the whole domain
    double class_length = 0.0;  // l_j, as a fraction of the whole domain
    double weight = 0.0;        // w_j = e_j / l_j, 0 for empty or error-free blocks
};

struct ErrorIntervalSet {
    std::vector<ErrorInterval> per_class;  // index j-1 holds class j
};

ErrorIntervalSet error_intervals(const SortedClassification& sc);

// Component j = integral of |f_mod - f_exact| over block j, i.e.
// (1/N) * sum of |actual - j| across the block. Each value is an integer
// multiple of 1/N, so double precision is exact far below any reported digit.
std::vector<double> class_integrals(const SortedClassification& sc);

struct IndexReport {
    std::vector<double> class_integrals;
    std::vector<double> weights;
    double index_value = 0.0;       // I
    double max_value = 0.0;         // K, sharp maximum given the block sizes
    double normalized_value = 0.0;  // I_n = I / K, in [0, 1]
};

// The error-interval-weighted index I = sum_j w_j * integral_j, together
// with its sharp maximum K and the normalized value I / K.
IndexReport ordinal_index(const EvaluationSet& set);

// K = sum_i l_i * max{M - i, i - 1} with l_i = class_sizes[i-1] / N.
// Throws DegenerateError when all sizes are zero.
double max_index(const std::vector<std::size_t>& class_sizes, std::size_t n_classes);

double normalized_index(const EvaluationSet& set);

// Relabels the true class of a currently correct observation, leaving the
// probabilities (and therefore predictions, blocks and K) untouched.
// Throws PreconditionError if the observation is already misclassified or
// new_label equals its predicted class.
EvaluationSet degrade_one_observation(const EvaluationSet& set, std::size_t observation,
                                      Label new_label);

} // namespace ordeval
