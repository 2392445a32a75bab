#pragma once

#include <cstdint>

#include "calibra/circle.hpp"

namespace calibra {

/// Stateless counter RNG: the value at position `index` of the stream keyed
/// by `seed` is a pure function of (seed, index), so parallel consumers get
/// identical streams regardless of scheduling. splitmix64-style finalizer
/// over a Weyl sequence.
inline std::uint64_t counter_rand(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed * 0xFF51AFD7ED558CCDull + 0x9E3779B97F4A7C15ull;
    z ^= index * 0xC2B2AE3D27D4EB4Full + 0x165667B19E3779F9ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Uniform double in [0, 1).
inline double counter_uniform01(std::uint64_t seed, std::uint64_t index) {
    return static_cast<double>(counter_rand(seed, index) >> 11) * 0x1.0p-53;
}

/// Uniform angle in [0, 2pi).
inline double counter_angle(std::uint64_t seed, std::uint64_t index) {
    return two_pi * counter_uniform01(seed, index);
}

}  // namespace calibra
