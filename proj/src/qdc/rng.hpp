// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace qdc {

// splitmix64 (Vigna, public domain). Used both as a seed scrambler and to
// derive independent per-point streams from (seed, indices).
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Derive a stream seed from a base seed plus up to two stream indices.
/// Same inputs give the same stream on every platform.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t h = splitmix64(base);
  h = splitmix64(h ^ (a + 0x9E3779B97F4A7C15ULL));
  h = splitmix64(h ^ (b + 0xC2B2AE3D27D4EB4FULL));
  return h;
}

/// Uniform double in [0, 1) from the top 53 bits of the generator output.
/// std::generate_canonical is implementation-defined; this is not.
inline double uniform01(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
  return std::mt19937_64(splitmix64(seed));
}

}  // namespace qdc
