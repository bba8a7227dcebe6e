#pragma once

#include <cstdint>

namespace netgrowth {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std::mt19937_64 +
// std::uniform_*_distribution because the standard distributions are
// implementation-defined; this sequence is identical on every platform,
// which keeps seeded graph generation reproducible everywhere.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1), 53 random bits.
    constexpr double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound), bound > 0. Rejection sampling keeps it
    // unbiased; the loop terminates with overwhelming probability.
    constexpr std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t v = next();
        while (v >= limit) {
            v = next();
        }
        return v % bound;
    }

private:
    std::uint64_t state_;
};

} // namespace netgrowth
