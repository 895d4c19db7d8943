#include "ordeval/simulation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ordeval/rng.hpp"

namespace ordeval {

Dataset generate_dataset(const SimulationConfig& config) {
    const std::size_t n = config.n_observations;
    if (n < 50 || n % sim::kNumClasses != 0) {
        throw ConfigError(fmt::format(
            "n_observations = {} must be >= 50 and divisible by {}", n,
            sim::kNumClasses));
    }
    const std::size_t per_class = n / sim::kNumClasses;

    Dataset dataset;
    dataset.features = Matrix(n, sim::kNumFeatures);
    dataset.labels.reserve(n);

    std::size_t row = 0;
    for (std::size_t c = 0; c < sim::kNumClasses; ++c) {
        Rng rng(derive_stream(config.seed, c));
        for (std::size_t i = 0; i < per_class; ++i, ++row) {
            dataset.features(row, 0) = rng.normal(sim::kX1Mean[c], sim::kX1Sd[c]);
            dataset.features(row, 1) = rng.normal(sim::kX2Mean[c], sim::kX2Sd[c]);
            dataset.features(row, 2) = rng.uniform(sim::kX3Lo, sim::kX3Hi);
            dataset.labels.push_back(static_cast<Label>(c + 1));
        }
    }
    return dataset;
}

namespace {

struct Standardizer {
    std::array<double, sim::kNumFeatures> mean{};
    std::array<double, sim::kNumFeatures> sd{};

    static Standardizer fit(const Matrix& features) {
        Standardizer s;
        const auto n = static_cast<double>(features.rows());
        for (std::size_t f = 0; f < sim::kNumFeatures; ++f) {
            double sum = 0.0;
            for (std::size_t i = 0; i < features.rows(); ++i) sum += features(i, f);
            s.mean[f] = sum / n;
            double ss = 0.0;
            for (std::size_t i = 0; i < features.rows(); ++i) {
                const double d = features(i, f) - s.mean[f];
                ss += d * d;
            }
            s.sd[f] = std::sqrt(ss / n);
            if (s.sd[f] < 1e-12) s.sd[f] = 1.0;  // constant feature: neutral scale
        }
        return s;
    }

    double scaled(const Matrix& m, std::size_t i, std::size_t f) const {
        return (m(i, f) - mean[f]) / sd[f];
    }
};

} // namespace

Matrix knn_classifier(const Dataset& train, std::size_t k_neighbors,
                      const Matrix& query) {
    const std::size_t n_train = train.features.rows();
    if (n_train == 0) {
        throw EmptyTrainError("kNN needs a nonempty training set");
    }
    if (k_neighbors < 1 || k_neighbors > n_train) {
        throw ConfigError(fmt::format("k_neighbors = {} must be in 1..{}", k_neighbors,
                                      n_train));
    }

    const Standardizer scaler = Standardizer::fit(train.features);
    Matrix probabilities(query.rows(), sim::kNumClasses);

    std::vector<std::pair<double, std::size_t>> distances(n_train);
    for (std::size_t q = 0; q < query.rows(); ++q) {
        for (std::size_t t = 0; t < n_train; ++t) {
            double d2 = 0.0;
            for (std::size_t f = 0; f < sim::kNumFeatures; ++f) {
                const double d = scaler.scaled(query, q, f) - scaler.scaled(train.features, t, f);
                d2 += d * d;
            }
            distances[t] = {d2, t};
        }
        std::partial_sort(distances.begin(), distances.begin() + static_cast<long>(k_neighbors),
                          distances.end());

        std::array<std::size_t, sim::kNumClasses> votes{};
        for (std::size_t k = 0; k < k_neighbors; ++k) {
            ++votes[static_cast<std::size_t>(train.labels[distances[k].second] - 1)];
        }
        for (std::size_t c = 0; c < sim::kNumClasses; ++c) {
            probabilities(q, c) =
                static_cast<double>(votes[c]) / static_cast<double>(k_neighbors);
        }
    }
    return probabilities;
}

Matrix gaussian_classconditional_classifier(const Dataset& train, const Matrix& query) {
    const std::size_t n_train = train.features.rows();
    if (n_train == 0) {
        throw EmptyTrainError("Gaussian classifier needs a nonempty training set");
    }

    constexpr double kVarianceFloor = 1e-6;
    std::array<std::array<double, sim::kNumFeatures>, sim::kNumClasses> mean{};
    std::array<std::array<double, sim::kNumFeatures>, sim::kNumClasses> variance{};
    std::array<double, sim::kNumClasses> log_prior{};

    for (std::size_t c = 0; c < sim::kNumClasses; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n_train; ++i) {
            if (train.labels[i] == static_cast<Label>(c + 1)) members.push_back(i);
        }
        if (members.size() < 2) {
            throw DegenerateClassError(fmt::format(
                "class {} has {} training points; need at least 2", c + 1,
                members.size()));
        }
        const auto count = static_cast<double>(members.size());
        for (std::size_t f = 0; f < sim::kNumFeatures; ++f) {
            double sum = 0.0;
            for (std::size_t i : members) sum += train.features(i, f);
            mean[c][f] = sum / count;
            double ss = 0.0;
            for (std::size_t i : members) {
                const double d = train.features(i, f) - mean[c][f];
                ss += d * d;
            }
            variance[c][f] = std::max(ss / count, kVarianceFloor);
        }
        log_prior[c] = std::log(count / static_cast<double>(n_train));
    }

    Matrix probabilities(query.rows(), sim::kNumClasses);
    for (std::size_t q = 0; q < query.rows(); ++q) {
        std::array<double, sim::kNumClasses> log_posterior{};
        for (std::size_t c = 0; c < sim::kNumClasses; ++c) {
            double ll = log_prior[c];
            for (std::size_t f = 0; f < sim::kNumFeatures; ++f) {
                const double d = query(q, f) - mean[c][f];
                ll -= 0.5 * (std::log(2.0 * M_PI * variance[c][f]) +
                             d * d / variance[c][f]);
            }
            log_posterior[c] = ll;
        }
        const double top = *std::max_element(log_posterior.begin(), log_posterior.end());
        double norm = 0.0;
        for (std::size_t c = 0; c < sim::kNumClasses; ++c) {
            log_posterior[c] = std::exp(log_posterior[c] - top);
            norm += log_posterior[c];
        }
        for (std::size_t c = 0; c < sim::kNumClasses; ++c) {
            probabilities(q, c) = log_posterior[c] / norm;
        }
    }
    return probabilities;
}

Matrix majority_baseline(const Dataset& train, const Matrix& query) {
    const std::size_t n_train = train.features.rows();
    if (n_train == 0) {
        throw EmptyTrainError("majority baseline needs a nonempty training set");
    }
    std::array<double, sim::kNumClasses> frequency{};
    for (Label y : train.labels) {
        frequency[static_cast<std::size_t>(y - 1)] += 1.0;
    }
    for (double& f : frequency) f /= static_cast<double>(n_train);

    Matrix probabilities(query.rows(), sim::kNumClasses);
    for (std::size_t q = 0; q < query.rows(); ++q) {
        for (std::size_t c = 0; c < sim::kNumClasses; ++c) {
            probabilities(q, c) = frequency[c];
        }
    }
    return probabilities;
}

std::vector<std::size_t> stratified_folds(const std::vector<Label>& labels,
                                          std::size_t n_classes, std::size_t folds,
                                          std::uint64_t seed) {
    std::vector<std::size_t> assignment(labels.size());
    // Deal class by class into a single round-robin over folds: per-class
    // counts differ by at most one (stratification) and so do overall fold
    // sizes (the deal is one uninterrupted cycle over all N observations).
    std::size_t next_fold = 0;
    for (std::size_t c = 1; c <= n_classes; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] == static_cast<Label>(c)) members.push_back(i);
        }
        Rng rng(derive_stream(seed, 0x0f01d5ULL + c));
        rng.shuffle(members);
        for (std::size_t i : members) {
            assignment[i] = next_fold;
            next_fold = (next_fold + 1) % folds;
        }
    }
    return assignment;
}

EvaluationSet kfold_cv(const Dataset& dataset, const Classifier& model,
                       const CvConfig& cv) {
    const std::size_t n = dataset.features.rows();
    if (cv.folds < 2 || cv.folds > n) {
        throw ConfigError(fmt::format("folds = {} must be in 2..{}", cv.folds, n));
    }

    const std::vector<std::size_t> fold_of =
        stratified_folds(dataset.labels, sim::kNumClasses, cv.folds, cv.seed);

    Matrix probabilities(n, sim::kNumClasses);
    for (std::size_t f = 0; f < cv.folds; ++f) {
        Dataset train;
        std::vector<std::size_t> test_rows;
        std::size_t n_train = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (fold_of[i] != f) ++n_train;
        }
        train.features = Matrix(n_train, sim::kNumFeatures);
        train.labels.reserve(n_train);
        std::size_t r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (fold_of[i] == f) {
                test_rows.push_back(i);
                continue;
            }
            for (std::size_t col = 0; col < sim::kNumFeatures; ++col) {
                train.features(r, col) = dataset.features(i, col);
            }
            train.labels.push_back(dataset.labels[i]);
            ++r;
        }

        for (std::size_t c = 1; c <= sim::kNumClasses; ++c) {
            if (std::find(train.labels.begin(), train.labels.end(),
                          static_cast<Label>(c)) == train.labels.end()) {
                throw FoldError(fmt::format(
                    "training data for fold {} lacks class {}", f, c));
            }
        }

        Matrix query(test_rows.size(), sim::kNumFeatures);
        for (std::size_t t = 0; t < test_rows.size(); ++t) {
            for (std::size_t col = 0; col < sim::kNumFeatures; ++col) {
                query(t, col) = dataset.features(test_rows[t], col);
            }
        }

        const Matrix fold_probabilities = model(train, query);
        for (std::size_t t = 0; t < test_rows.size(); ++t) {
            for (std::size_t c = 0; c < sim::kNumClasses; ++c) {
                probabilities(test_rows[t], c) = fold_probabilities(t, c);
            }
        }
    }

    return validate_evaluation_set(std::move(probabilities), dataset.labels);
}

} // namespace ordeval
