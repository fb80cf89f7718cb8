#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace labeltok {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Stream for (seed, key): identical on every platform and independent of call order.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t key) {
    return std::mt19937_64(mix64(mix64(seed) ^ key));
}

/// Uniform double in the open interval (0, 1) from the top 53 bits.
inline double uniform_open01(std::mt19937_64& gen) {
    for (;;) {
        const std::uint64_t bits = gen() >> 11;
        if (bits != 0) return static_cast<double>(bits) * 0x1.0p-53;
    }
}

/// Uniform integer in [0, bound) by rejection; bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t x = gen();
        if (x < limit) return x % bound;
    }
}

} // namespace labeltok
