// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

// Seeding discipline: every randomized routine takes an explicit 64-bit seed
// and derives one child seed per replicate, so results are independent of
// thread count and replicate execution order.

namespace disp::rng {

using Engine = std::mt19937_64;

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// splitmix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + (index + 1) * kGolden);
}

inline Engine make_engine(std::uint64_t seed, std::uint64_t replicate = 0) {
    return Engine(child_seed(seed, replicate));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

// Unbiased integer in [0, n) via multiply-shift with rejection (Lemire 2019).
inline std::uint64_t bounded(Engine& g, std::uint64_t n) {
    using u128 = unsigned __int128;
    u128 m = static_cast<u128>(g()) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
        std::uint64_t t = -n % n;
        while (lo < t) {
            m = static_cast<u128>(g()) * n;
            lo = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace disp::rng
