#pragma once

#include <cstdint>
#include <random>

namespace ordeval {

// Derives an independent stream seed from (seed, tag) with the splitmix64
// finalizer. Used to pre-split RNG streams per class and per fold so that
// parallel evaluation is bit-identical to sequential.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag);

// Seeded generator with fully specified output: std::mt19937_64 (its raw
// output sequence is pinned by the standard) plus fixed transforms to
// uniforms and normals. Normal deviates use Box-Muller on two uniforms, so
// every normal consumes exactly two engine outputs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on [0, 1): top 53 bits of one engine output.
    double uniform01();

    double uniform(double lo, double hi);

    double normal(double mean, double stddev);

    // Fisher-Yates shuffle, consuming one engine output per step.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(engine_() % i);
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ordeval
