#pragma once

#include <cstdint>
#include <random>

namespace crws {

/// All randomized pieces (graph generation, weightings, sample points) draw
/// from mt19937_64 through these helpers only, so runs replay exactly for a
/// given seed. Distributions are built from raw engine output because the
/// standard distribution objects are implementation-defined.

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

/// Uniform in [0, 1) with 53-bit resolution.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_real(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

/// Uniform integer in [0, bound). Modulo bias is negligible at the scales
/// used here (bound << 2^64) and keeps the draw sequence simple to replay.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace crws
