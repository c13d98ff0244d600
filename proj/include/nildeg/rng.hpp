#pragma once

#include <cstdint>

namespace nildeg {

// Counter-mode SplitMix64. The k-th output of the stream keyed by `seed` is
// the SplitMix64 finalizer applied to seed + (k+1) * golden gamma. Stateless:
// any worker can evaluate any position of the stream, so sample i of a Monte
// Carlo run is the same number no matter how samples are partitioned.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Rejection-free map of a 64-bit word onto [0, m): the Lemire multiply-shift.
// Bias is m / 2^64, far below anything observable at desk-scale sample counts,
// and the mapping is deterministic across platforms.
inline std::uint64_t bounded_index(std::uint64_t word, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(word) * m) >> 64);
}

}  // namespace nildeg
