#pragma once

#include <cstdint>
#include <numbers>
#include <random>

namespace gyro {

/// Generator for sample `index` of a run seeded with `seed`. Every sample
/// owns its stream, so results do not depend on how indices are split
/// across workers.
inline std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

/// Uniform double in [0, 1) built from the top 53 bits; unlike
/// std::uniform_real_distribution the sequence is identical on every
/// standard library.
inline double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_angle(std::mt19937_64& rng) {
  return 2.0 * std::numbers::pi * unit_real(rng);
}

}  // namespace gyro
