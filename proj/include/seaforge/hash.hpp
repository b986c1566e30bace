#pragma once

#include <cstdint>

namespace seaforge {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

/// SplitMix64 finalizer. A bijection on 64-bit values with full avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept
{
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Independent sub-stream seed for one consumer (ocean, placement, grain, ...) of a scene seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept
{
  return mix64(seed + (stream + 1) * kGoldenGamma);
}

/// Small integer lattice hash used by the procedural noise functions.
constexpr std::uint32_t lattice_hash(std::int32_t x, std::int32_t y, std::uint64_t seed) noexcept
{
  std::uint64_t h = seed ^ (static_cast<std::uint64_t>(static_cast<std::uint32_t>(x)) << 32) ^
                    static_cast<std::uint32_t>(y);
  return static_cast<std::uint32_t>(mix64(h) >> 32);
}

} // namespace seaforge
