#pragma once

#include <cstdint>
#include <random>

namespace graphlab {

/// SplitMix64 finalizer; used to spread seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of stream `index` under a master seed. Streams for different
/// indices are independent for practical purposes; the mapping never
/// depends on thread count or scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return mix64(mix64(master) ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) {
    return Rng(mix64(seed));
}

/// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double uniform01(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform integer in [0, n), n small. Lemire-free modulo is fine here: bias < 2^-60.
inline int uniform_index(Rng &rng, int n) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

}  // namespace graphlab
