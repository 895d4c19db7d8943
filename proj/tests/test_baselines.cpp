#include <doctest.h>

#include <cmath>

#include "ordeval/baselines.hpp"
#include "ordeval/rng.hpp"
#include "oracles.hpp"

using namespace ordeval;

namespace {

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

TEST_CASE("accuracy") {
    std::vector<Label> predicted(20, 1), actual(20, 1);
    predicted[7] = 3;  // 19 of 20 correct
    CHECK(accuracy(predicted, actual) == doctest::Approx(0.95).epsilon(1e-15));
    CHECK(accuracy(actual, actual) == 1.0);

    const EvaluationSet set = worked_example();
    CHECK(accuracy(argmax_predict(set), set.labels()) ==
          doctest::Approx(0.6).epsilon(1e-15));

    const std::vector<Label> short_vector = {1};
    CHECK_THROWS_AS(accuracy(predicted, short_vector), ShapeError);
}

TEST_CASE("mse uses squared label distance on hard predictions") {
    // toy 1, model 1: one error at distance 2 among 20
    std::vector<Label> predicted(20, 2), actual(20, 2);
    predicted[0] = 1;
    actual[0] = 3;
    CHECK(mse(predicted, actual) == doctest::Approx(0.2).epsilon(1e-15));
    // toy 1, model 2: one error at distance 1
    actual[0] = 2;
    CHECK(mse(predicted, actual) == doctest::Approx(0.05).epsilon(1e-15));
    predicted[0] = 2;
    CHECK(mse(predicted, actual) == 0.0);
}

TEST_CASE("accuracy and misclassification proportion sum to 1; mse zero iff perfect") {
    Rng rng(19);
    for (int round = 0; round < 100; ++round) {
        const EvaluationSet set = oracle::random_set(rng, 1 + round % 30, 2 + round % 4);
        const std::vector<Label> predicted = argmax_predict(set);
        const double acc = accuracy(predicted, set.labels());
        std::size_t wrong = 0;
        for (std::size_t i = 0; i < set.n_observations(); ++i) {
            if (predicted[i] != set.label(i)) ++wrong;
        }
        CHECK(acc + static_cast<double>(wrong) /
                        static_cast<double>(set.n_observations()) ==
              doctest::Approx(1.0).epsilon(1e-15));
        CHECK((mse(predicted, set.labels()) == 0.0) == (acc == 1.0));
    }
}

TEST_CASE("auc_binary basics") {
    const std::vector<double> separated = {0.9, 0.8, 0.2, 0.1};
    CHECK(auc_binary(separated, {true, true, false, false}) == 1.0);
    CHECK(auc_binary(separated, {false, false, true, true}) == 0.0);

    const std::vector<double> constant = {0.4, 0.4, 0.4, 0.4, 0.4};
    CHECK(auc_binary(constant, {true, false, true, false, false}) == 0.5);

    const std::vector<double> three = {0.9, 0.4, 0.6};
    // brute force over the 2 positive-negative pairs: both won
    CHECK(auc_binary(three, {true, false, false}) == 1.0);

    CHECK_THROWS_AS(auc_binary(three, {true, true, true}), DegenerateError);
    CHECK_THROWS_AS(auc_binary(three, {false, false, false}), DegenerateError);
}

TEST_CASE("auc_binary complement symmetry") {
    Rng rng(21);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 2 + round % 30;
        std::vector<double> scores(n);
        std::vector<bool> positives(n);
        bool has_pos = false, has_neg = false;
        for (std::size_t i = 0; i < n; ++i) {
            // coarse grid so ties actually occur
            scores[i] = std::floor(rng.uniform01() * 8.0) / 8.0;
            positives[i] = rng.uniform01() < 0.5;
            (positives[i] ? has_pos : has_neg) = true;
        }
        if (!has_pos || !has_neg) continue;
        std::vector<bool> negatives(n);
        for (std::size_t i = 0; i < n; ++i) negatives[i] = !positives[i];
        CHECK(auc_binary(scores, positives) + auc_binary(scores, negatives) ==
              doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("auc_multiclass reference points") {
    // one-hot correct: every pairwise ranking is perfect
    Matrix one_hot(6, 3);
    const std::vector<Label> labels = {1, 1, 2, 2, 3, 3};
    for (std::size_t i = 0; i < 6; ++i) {
        one_hot(i, static_cast<std::size_t>(labels[i] - 1)) = 1.0;
    }
    CHECK(auc_multiclass(validate_evaluation_set(std::move(one_hot), labels)) == 1.0);

    // identical rows carry no ranking information at all
    Matrix flat(6, 3);
    for (std::size_t i = 0; i < 6; ++i) {
        flat(i, 0) = 0.2; flat(i, 1) = 0.3; flat(i, 2) = 0.5;
    }
    CHECK(auc_multiclass(validate_evaluation_set(std::move(flat), labels)) == 0.5);
}

TEST_CASE("auc_multiclass names an absent class") {
    const EvaluationSet set = validate_evaluation_set(
        Matrix::from_rows({{0.5, 0.3, 0.2}, {0.2, 0.5, 0.3}}), {1, 2});
    CHECK_THROWS_WITH_AS(auc_multiclass(set), "class 3 is absent from the labels",
                         DegenerateError);
}

TEST_CASE("auc_multiclass equals the pair-enumeration oracle") {
    CHECK(auc_multiclass(worked_example()) ==
          doctest::Approx(oracle::auc_pair_enumeration(worked_example()))
              .epsilon(1e-12));

    Rng rng(22);
    for (int round = 0; round < 200; ++round) {
        const std::size_t m = 2 + round % 4;
        const std::size_t n = m + 1 + round % 35;
        EvaluationSet set = oracle::random_set(rng, n, m);
        bool all_present = true;
        for (std::size_t c = 1; c <= m; ++c) {
            bool found = false;
            for (Label y : set.labels()) {
                if (y == static_cast<Label>(c)) { found = true; break; }
            }
            if (!found) { all_present = false; break; }
        }
        if (!all_present) continue;
        CHECK(std::abs(auc_multiclass(set) - oracle::auc_pair_enumeration(set)) <=
              1e-12);
    }
}

TEST_CASE("auc_multiclass is invariant under monotone column transforms") {
    Rng rng(23);
    for (int round = 0; round < 40; ++round) {
        const std::size_t m = 3;
        EvaluationSet set = oracle::random_set(rng, 15, m);
        bool all_present = true;
        for (std::size_t c = 1; c <= m; ++c) {
            bool found = false;
            for (Label y : set.labels()) {
                if (y == static_cast<Label>(c)) { found = true; break; }
            }
            if (!found) { all_present = false; break; }
        }
        if (!all_present) continue;
        const double base = auc_multiclass(set);

        // strictly increasing map applied to one column at a time; the result
        // is no longer row-stochastic, so rank directly via the binary AUC
        const std::size_t column = round % m;
        Matrix transformed = set.probabilities();
        for (std::size_t i = 0; i < set.n_observations(); ++i) {
            transformed(i, column) = std::sqrt(transformed(i, column)) * 3.0 + 1.0;
        }
        double total = 0.0;
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < m; ++b) {
                if (a == b) continue;
                std::vector<double> scores;
                std::vector<bool> positive;
                for (std::size_t i = 0; i < set.n_observations(); ++i) {
                    const auto y = static_cast<std::size_t>(set.label(i) - 1);
                    if (y != a && y != b) continue;
                    scores.push_back(transformed(i, a));
                    positive.push_back(y == a);
                }
                total += auc_binary(scores, positive);
            }
        }
        CHECK(total / static_cast<double>(m * (m - 1)) ==
              doctest::Approx(base).epsilon(1e-12));
    }
}
