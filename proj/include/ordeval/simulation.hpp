#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "ordeval/core.hpp"
#include "ordeval/matrix.hpp"

namespace ordeval {

// Fixed synthetic-data family: five ordinal classes, three covariates.
// x1 and x2 are class-conditional normals, x3 is Uniform(0, 3) for every
// class (an uninformative covariate).
namespace sim {

inline constexpr std::size_t kNumClasses = 5;
inline constexpr std::size_t kNumFeatures = 3;

inline constexpr std::array<double, kNumClasses> kX1Mean = {2.0, 3.0, 4.0, 5.0, 6.0};
inline constexpr std::array<double, kNumClasses> kX1Sd = {1.5, 1.0, 1.5, 1.0, 1.0};
inline constexpr std::array<double, kNumClasses> kX2Mean = {1.0, 5.0, 7.0, 8.5, 9.5};
inline constexpr std::array<double, kNumClasses> kX2Sd = {2.5, 2.0, 2.5, 2.0, 2.0};
inline constexpr double kX3Lo = 0.0;
inline constexpr double kX3Hi = 3.0;

} // namespace sim

struct SimulationConfig {
    std::size_t n_observations = 1500;  // >= 50 and divisible by 5
    std::uint64_t seed = 0;
};

struct Dataset {
    Matrix features;            // N x 3
    std::vector<Label> labels;  // classes 1..5, exactly N/5 each
};

struct CvConfig {
    std::size_t folds = 10;  // 2 <= folds <= N
    std::uint64_t seed = 0;
};

// Draws N/5 observations per class with one pre-split RNG stream per class,
// so the draw for class c does not depend on the other classes' draws.
// Deterministic under the seed.
Dataset generate_dataset(const SimulationConfig& config);

// A classifier maps (training data, query features) to an N_query x 5 row-
// stochastic probability matrix. All three reference classifiers are
// deterministic, which keeps cross-validation reproducible.
using Classifier = std::function<Matrix(const Dataset& train, const Matrix& query)>;

// Vote fractions of the k nearest training points by Euclidean distance on
// features standardized with the training mean/sd. Distance ties break on
// the training index.
Matrix knn_classifier(const Dataset& train, std::size_t k_neighbors,
                      const Matrix& query);

// Per-class independent-feature Gaussian likelihoods times class priors,
// normalized per row. Variances are floored at 1e-6.
Matrix gaussian_classconditional_classifier(const Dataset& train, const Matrix& query);

// Every row is the training class-frequency vector.
Matrix majority_baseline(const Dataset& train, const Matrix& query);

// Stratified k-fold cross-validation: every observation's probability row
// comes from the model trained on the other k-1 folds. Fold sizes differ by
// at most one, per-class membership is spread round-robin after a seeded
// shuffle, and the assembled out-of-fold matrix covers all N observations
// exactly once. Throws FoldError if any training fold lacks a class.
EvaluationSet kfold_cv(const Dataset& dataset, const Classifier& model,
                       const CvConfig& cv);

// Fold assignment used by kfold_cv; exposed for testing the partition
// contract. Returns fold id (0-based) per observation.
std::vector<std::size_t> stratified_folds(const std::vector<Label>& labels,
                                          std::size_t n_classes, std::size_t folds,
                                          std::uint64_t seed);

} // namespace ordeval
