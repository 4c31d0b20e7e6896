#pragma once

#include <cstdint>
#include <random>

namespace crnet {

using Rng = std::mt19937_64;

// Bit-level conversion so seeded runs reproduce across standard libraries
// (std::uniform_real_distribution is implementation-defined).
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(Rng& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

// Box-Muller; one draw per call.
double standard_normal(Rng& rng);

inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(uniform01(rng) * static_cast<double>(n)) % n;
}

}  // namespace crnet
