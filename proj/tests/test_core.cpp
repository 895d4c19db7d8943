#include <doctest.h>

#include <algorithm>

#include "ordeval/core.hpp"
#include "ordeval/rng.hpp"
#include "oracles.hpp"

using namespace ordeval;

namespace {

// Table-1-style reference input used across the suites.
EvaluationSet worked_example() {
    Matrix p = Matrix::from_rows({
        {0.288, 0.174, 0.538}, {0.325, 0.478, 0.197}, {0.828, 0.013, 0.159},
        {0.310, 0.106, 0.584}, {0.120, 0.262, 0.618}, {0.426, 0.167, 0.407},
        {0.849, 0.126, 0.025}, {0.520, 0.401, 0.079}, {0.147, 0.670, 0.183},
        {0.142, 0.593, 0.265},
    });
    return validate_evaluation_set(std::move(p), {1, 2, 1, 3, 3, 3, 2, 1, 2, 3});
}

} // namespace

TEST_CASE("validate_evaluation_set accepts the worked example") {
    const EvaluationSet set = worked_example();
    CHECK(set.n_observations() == 10);
    CHECK(set.n_classes() == 3);
    CHECK(set.label(0) == 1);
    CHECK(set.probability(0, 3) == doctest::Approx(0.538));
}

TEST_CASE("validate_evaluation_set accepts a symmetric binary row") {
    const EvaluationSet set =
        validate_evaluation_set(Matrix::from_rows({{0.5, 0.5}}), {1});
    CHECK(set.n_observations() == 1);
    CHECK(set.n_classes() == 2);
}

TEST_CASE("validate_evaluation_set rejects bad rows") {
    CHECK_THROWS_AS(validate_evaluation_set(Matrix::from_rows({{0.7, 0.7}}), {1}),
                    RowSumError);
    CHECK_THROWS_AS(validate_evaluation_set(Matrix::from_rows({{1.2, -0.2}}), {1}),
                    RangeError);
    CHECK_THROWS_AS(validate_evaluation_set(Matrix::from_rows({{0.5, 0.5}}), {3}),
                    RangeError);
    CHECK_THROWS_AS(validate_evaluation_set(Matrix::from_rows({{0.5, 0.5}}), {1, 2}),
                    ShapeError);
    CHECK_THROWS_AS(validate_evaluation_set(Matrix(0, 2), {}), ShapeError);
    CHECK_THROWS_AS(validate_evaluation_set(Matrix::from_rows({{1.0}}), {1}),
                    ShapeError);
}

TEST_CASE("row sums slightly off within tolerance pass, beyond fail") {
    CHECK_NOTHROW(
        validate_evaluation_set(Matrix::from_rows({{0.5, 0.5 + 0.9e-6}}), {1}));
    CHECK_THROWS_AS(
        validate_evaluation_set(Matrix::from_rows({{0.5, 0.5 + 1.1e-6}}), {1}),
        RowSumError);
}

TEST_CASE("argmax_predict matches the worked example and tie-breaks low") {
    const std::vector<Label> predicted = argmax_predict(worked_example());
    CHECK(predicted == std::vector<Label>{3, 2, 1, 3, 3, 1, 1, 1, 2, 2});

    const EvaluationSet ties = validate_evaluation_set(
        Matrix::from_rows({{1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.0, 1.0, 0.0}}), {1, 2});
    CHECK(argmax_predict(ties) == std::vector<Label>{1, 2});
}

TEST_CASE("argmax_predict is pure and permutation-equivariant") {
    Rng rng(42);
    const EvaluationSet set = oracle::random_set(rng, 23, 4);
    const std::vector<Label> first = argmax_predict(set);
    CHECK(argmax_predict(set) == first);

    // reverse the observations: predictions reverse identically
    const std::size_t n = set.n_observations();
    Matrix reversed(n, set.n_classes());
    std::vector<Label> reversed_labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < set.n_classes(); ++j) {
            reversed(i, j) = set.probabilities()(n - 1 - i, j);
        }
        reversed_labels[i] = set.label(n - 1 - i);
    }
    std::vector<Label> expected(first.rbegin(), first.rend());
    CHECK(argmax_predict(validate_evaluation_set(std::move(reversed),
                                                 std::move(reversed_labels))) ==
          expected);
}

TEST_CASE("confusion_matrix counts predicted x actual") {
    // toy example 1, model 1: rows (5,0,1 / 0,7,0 / 0,0,7)
    std::vector<Label> predicted, actual;
    for (int i = 0; i < 5; ++i) { predicted.push_back(1); actual.push_back(1); }
    predicted.push_back(1); actual.push_back(3);
    for (int i = 0; i < 7; ++i) { predicted.push_back(2); actual.push_back(2); }
    for (int i = 0; i < 7; ++i) { predicted.push_back(3); actual.push_back(3); }

    const ConfusionMatrix cm = confusion_matrix(predicted, actual, 3);
    CHECK(cm.at(1, 1) == 5);
    CHECK(cm.at(1, 2) == 0);
    CHECK(cm.at(1, 3) == 1);
    CHECK(cm.at(2, 2) == 7);
    CHECK(cm.at(3, 3) == 7);
    CHECK(cm.total() == 20);
}

TEST_CASE("confusion_matrix of perfect predictions is diagonal") {
    const std::vector<Label> labels = {1, 1, 2, 3, 3, 3};
    const ConfusionMatrix cm = confusion_matrix(labels, labels, 3);
    CHECK(cm.at(1, 1) == 2);
    CHECK(cm.at(2, 2) == 1);
    CHECK(cm.at(3, 3) == 3);
    for (Label r = 1; r <= 3; ++r) {
        for (Label c = 1; c <= 3; ++c) {
            if (r != c) CHECK(cm.at(r, c) == 0);
        }
    }
}

TEST_CASE("confusion_matrix of the worked example argmax predictions") {
    const EvaluationSet set = worked_example();
    const ConfusionMatrix cm =
        confusion_matrix(argmax_predict(set), set.labels(), 3);
    // hand count over the ten rows
    CHECK(cm.at(1, 1) == 2); CHECK(cm.at(1, 2) == 1); CHECK(cm.at(1, 3) == 1);
    CHECK(cm.at(2, 1) == 0); CHECK(cm.at(2, 2) == 2); CHECK(cm.at(2, 3) == 1);
    CHECK(cm.at(3, 1) == 1); CHECK(cm.at(3, 2) == 0); CHECK(cm.at(3, 3) == 2);
}

TEST_CASE("confusion_matrix marginals match class counts") {
    Rng rng(7);
    for (int round = 0; round < 20; ++round) {
        const EvaluationSet set = oracle::random_set(rng, 31, 4);
        const std::vector<Label> predicted = argmax_predict(set);
        const ConfusionMatrix cm = confusion_matrix(predicted, set.labels(), 4);
        CHECK(cm.total() == 31);
        for (Label c = 1; c <= 4; ++c) {
            const auto actual_count = static_cast<std::size_t>(
                std::count(set.labels().begin(), set.labels().end(), c));
            const auto predicted_count = static_cast<std::size_t>(
                std::count(predicted.begin(), predicted.end(), c));
            CHECK(cm.column_sum(c) == actual_count);
            CHECK(cm.row_sum(c) == predicted_count);
        }
    }
}

TEST_CASE("confusion_matrix rejects mismatched lengths") {
    const std::vector<Label> a = {1, 2};
    const std::vector<Label> b = {1};
    CHECK_THROWS_AS(confusion_matrix(a, b, 2), ShapeError);
}
