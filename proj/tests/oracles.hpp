#pragma once

// Test-only oracles, kept deliberately independent of the library's own
// computation paths: the AUC oracle enumerates observation pairs instead of
// ranking, and the index maximum is found by exhaustive labeling search.

#include <cstdint>
#include <vector>

#include "ordeval/core.hpp"
#include "ordeval/index.hpp"
#include "ordeval/rng.hpp"

namespace oracle {

// Hand-Till AUC by brute-force enumeration of cross-class observation pairs:
// A(a|b) = (#[p_a of an a-observation > p_a of a b-observation] + 1/2 ties)
//          / (n_a * n_b), averaged over all ordered pairs.
inline double auc_pair_enumeration(const ordeval::EvaluationSet& set) {
    const std::size_t m = set.n_classes();
    const std::size_t n = set.n_observations();
    std::vector<std::vector<std::size_t>> members(m);
    for (std::size_t i = 0; i < n; ++i) {
        members[static_cast<std::size_t>(set.label(i) - 1)].push_back(i);
    }
    double total = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (a == b) continue;
            double credit = 0.0;
            for (std::size_t i : members[a]) {
                for (std::size_t j : members[b]) {
                    const double pi = set.probabilities()(i, a);
                    const double pj = set.probabilities()(j, a);
                    if (pi > pj) credit += 1.0;
                    else if (pi == pj) credit += 0.5;
                }
            }
            total += credit / (static_cast<double>(members[a].size()) *
                               static_cast<double>(members[b].size()));
        }
    }
    return total / (static_cast<double>(m) * static_cast<double>(m - 1));
}

// Random row-stochastic evaluation set. Probabilities are generated with
// distinct values almost surely; labels uniform on 1..M.
inline ordeval::EvaluationSet random_set(ordeval::Rng& rng, std::size_t n,
                                         std::size_t m) {
    ordeval::Matrix p(n, m);
    std::vector<ordeval::Label> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            p(i, j) = rng.uniform(1e-3, 1.0);
            sum += p(i, j);
        }
        for (std::size_t j = 0; j < m; ++j) p(i, j) /= sum;
        labels[i] = static_cast<ordeval::Label>(
            1 + static_cast<std::size_t>(rng.uniform01() * static_cast<double>(m)) % m);
    }
    return ordeval::validate_evaluation_set(std::move(p), std::move(labels));
}

// Largest index value over every possible labeling of the given set
// (predictions fixed by the probabilities). Exponential; small N only.
inline double max_index_over_labelings(const ordeval::EvaluationSet& set) {
    const std::size_t n = set.n_observations();
    const std::size_t m = set.n_classes();
    std::vector<ordeval::Label> labels(n, 1);
    double best = 0.0;
    while (true) {
        ordeval::EvaluationSet candidate =
            ordeval::validate_evaluation_set(set.probabilities(), labels);
        best = std::max(best, ordeval::ordinal_index(candidate).index_value);
        std::size_t pos = 0;
        while (pos < n && labels[pos] == static_cast<ordeval::Label>(m)) {
            labels[pos] = 1;
            ++pos;
        }
        if (pos == n) break;
        ++labels[pos];
    }
    return best;
}

// The adversarial labeling: every observation in predicted block i gets the
// class farthest from i, so |label - i| = max{M - i, i - 1} on the block.
inline std::vector<ordeval::Label> farthest_class_labels(
    const std::vector<ordeval::Label>& predicted, std::size_t m) {
    std::vector<ordeval::Label> labels(predicted.size());
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const auto j = static_cast<std::size_t>(predicted[i]);
        labels[i] = (m - j >= j - 1) ? static_cast<ordeval::Label>(m)
                                     : static_cast<ordeval::Label>(1);
    }
    return labels;
}

} // namespace oracle
