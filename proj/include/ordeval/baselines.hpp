#pragma once

#include <span>
#include <vector>

#include "ordeval/core.hpp"

namespace ordeval {

// One model's full scoreboard.
struct MetricSuite {
    double index = 0.0;
    double normalized_index = 0.0;
    double accuracy = 0.0;
    double mse = 0.0;
    double auc = 0.0;
};

// Fraction of predictions matching the actual label.
double accuracy(std::span<const Label> predicted, std::span<const Label> actual);

// Mean squared label distance, treating ordinal classes as integers.
double mse(std::span<const Label> predicted, std::span<const Label> actual);

// P(score_pos > score_neg) + 1/2 P(tie): the Mann-Whitney rank statistic with
// midranks for ties. Throws DegenerateError when either class is absent.
double auc_binary(std::span<const double> scores, const std::vector<bool>& positives);

// Multiclass AUC as the average over ordered class pairs (i, j) of A(i|j),
// where A(i|j) ranks class-i against class-j observations by the column-i
// probability. Equals the pairwise average of 1/2 (A(i|j) + A(j|i)) over
// unordered pairs. Throws DegenerateError naming any class absent from the
// labels.
double auc_multiclass(const EvaluationSet& set);

} // namespace ordeval
