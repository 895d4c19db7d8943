#include "ordeval/baselines.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace ordeval {

namespace {

void check_pair_shape(std::span<const Label> predicted, std::span<const Label> actual) {
    if (predicted.size() != actual.size()) {
        throw ShapeError(fmt::format("predicted length {} != actual length {}",
                                     predicted.size(), actual.size()));
    }
    if (predicted.empty()) {
        throw ShapeError("empty label vectors");
    }
}

} // namespace

double accuracy(std::span<const Label> predicted, std::span<const Label> actual) {
    check_pair_shape(predicted, actual);
    std::size_t correct = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        if (predicted[i] == actual[i]) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(predicted.size());
}

double mse(std::span<const Label> predicted, std::span<const Label> actual) {
    check_pair_shape(predicted, actual);
    long long total = 0;
    for (std::size_t i = 0; i < predicted.size(); ++i) {
        const long long d = static_cast<long long>(predicted[i]) -
                            static_cast<long long>(actual[i]);
        total += d * d;
    }
    return static_cast<double>(total) / static_cast<double>(predicted.size());
}

double auc_binary(std::span<const double> scores, const std::vector<bool>& positives) {
    if (scores.size() != positives.size()) {
        throw ShapeError(fmt::format("scores length {} != positives length {}",
                                     scores.size(), positives.size()));
    }
    const std::size_t n = scores.size();
    std::size_t n_pos = 0;
    for (bool p : positives) {
        if (p) ++n_pos;
    }
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0) {
        throw DegenerateError(
            fmt::format("need both classes present (positives = {}, negatives = {})",
                        n_pos, n_neg));
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Midranks: every member of a tie group gets the mean of the group's
    // 1-based ranks. Rank sums stay exact in double well below 2^53.
    double positive_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        const double midrank = static_cast<double>(i + 1 + j + 1) / 2.0;
        for (std::size_t k = i; k <= j; ++k) {
            if (positives[order[k]]) positive_rank_sum += midrank;
        }
        i = j + 1;
    }

    const double u = positive_rank_sum -
                     static_cast<double>(n_pos) * static_cast<double>(n_pos + 1) / 2.0;
    return u / (static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

double auc_multiclass(const EvaluationSet& set) {
    const std::size_t m = set.n_classes();
    const std::size_t n = set.n_observations();

    std::vector<std::vector<std::size_t>> members(m);
    for (std::size_t i = 0; i < n; ++i) {
        members[static_cast<std::size_t>(set.label(i) - 1)].push_back(i);
    }
    for (std::size_t c = 0; c < m; ++c) {
        if (members[c].empty()) {
            throw DegenerateError(
                fmt::format("class {} is absent from the labels", c + 1));
        }
    }

    // A(a|b) via the binary statistic on column a, restricted to classes a, b.
    const auto pairwise = [&](std::size_t a, std::size_t b) {
        std::vector<double> scores;
        std::vector<bool> positive;
        scores.reserve(members[a].size() + members[b].size());
        positive.reserve(scores.capacity());
        for (std::size_t i : members[a]) {
            scores.push_back(set.probabilities()(i, a));
            positive.push_back(true);
        }
        for (std::size_t i : members[b]) {
            scores.push_back(set.probabilities()(i, a));
            positive.push_back(false);
        }
        return auc_binary(scores, positive);
    };

    double total = 0.0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            total += pairwise(a, b);
            total += pairwise(b, a);
        }
    }
    return total / (static_cast<double>(m) * static_cast<double>(m - 1));
}

} // namespace ordeval
