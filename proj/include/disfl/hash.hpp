#ifndef DISFL_HASH_HPP
#define DISFL_HASH_HPP

#include <cstdint>
#include <string_view>

namespace disfl {

// 64-bit FNV-1a. Used for feature hashing, seed fan-out and corpus
// fingerprints; must stay stable across platforms and runs.
constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ull;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ull;

inline std::uint64_t fnv1a(std::string_view bytes,
                           std::uint64_t h = kFnvOffset) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

inline std::uint64_t fnv1a_u64(std::uint64_t v, std::uint64_t h = kFnvOffset) {
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xff;
    h *= kFnvPrime;
  }
  return h;
}

// splitmix64 finalizer; good avalanche for seed derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// Stable per-stage seed: one global seed fans out to independent streams
/// keyed by a stage name, so stages can be re-run in isolation.
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage) {
  return mix64(fnv1a(stage, fnv1a_u64(seed)));
}

/// Stable per-item seed within a stage (e.g. per-sentence RNG streams).
inline std::uint64_t derive_seed(std::uint64_t seed, std::string_view stage,
                                 std::uint64_t index) {
  return mix64(fnv1a_u64(index, fnv1a(stage, fnv1a_u64(seed))));
}

}  // namespace disfl

#endif  // DISFL_HASH_HPP
