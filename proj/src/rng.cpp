#include "ordeval/rng.hpp"

#include <cmath>
#include <numbers>

namespace ordeval {

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag) {
    // splitmix64 finalizer over seed advanced by tag golden-ratio increments
    std::uint64_t z = seed + (tag + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double Rng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
}

double Rng::normal(double mean, double stddev) {
    // u1 shifted into (0, 1] so the log is finite.
    const double u1 =
        (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double radius = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace ordeval
