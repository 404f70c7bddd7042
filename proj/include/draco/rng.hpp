#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace draco {

// All randomness in a run flows through these helpers so that results are
// reproducible bit-for-bit across standard library implementations.
// std::uniform_*_distribution is implementation-defined and must not be used.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

// Independent named stream derived from a run seed. Stream identity is the
// tag string, so adding streams never perturbs existing ones.
inline Rng derive_rng(std::uint64_t seed, std::string_view stream_tag) {
    return Rng{splitmix64(seed ^ fnv1a64(stream_tag))};
}

// Uniform in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform in [lo, hi).
inline double uniform_real(Rng& rng, double lo, double hi) {
    return lo + uniform01(rng) * (hi - lo);
}

// Uniform integer in [0, n), unbiased via rejection.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % n;
}

} // namespace draco
