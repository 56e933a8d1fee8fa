#pragma once

#include <cstdint>
#include <string_view>
#include <tuple>

namespace minjoin {

// 64-bit mixing and hashing primitives shared across the library.
// All hashing here is non-cryptographic.

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;

// Finalizer with full avalanche (splitmix64 output stage).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  return mix64(x + kGolden64);
}

// MurmurHash64A. Used for content fingerprints of substrings.
std::uint64_t hash_bytes(std::string_view data, std::uint64_t seed);

// Normalized unordered pair of dataset indices (a < b).
struct IdPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  friend bool operator==(const IdPair&, const IdPair&) = default;
  friend auto operator<=>(const IdPair& x, const IdPair& y) {
    return std::tie(x.a, x.b) <=> std::tie(y.a, y.b);
  }
};

inline IdPair make_pair_normalized(std::uint32_t x, std::uint32_t y) {
  return x < y ? IdPair{x, y} : IdPair{y, x};
}

// Verified join output: a normalized pair plus its exact edit distance.
struct OutputPair {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t distance = 0;

  friend bool operator==(const OutputPair&, const OutputPair&) = default;
  friend auto operator<=>(const OutputPair& x, const OutputPair& y) {
    return std::tie(x.a, x.b, x.distance) <=> std::tie(y.a, y.b, y.distance);
  }
};

// Packed key for hash sets of normalized pairs.
inline std::uint64_t pair_key(const IdPair& p) {
  return (static_cast<std::uint64_t>(p.a) << 32) | p.b;
}

}  // namespace minjoin
