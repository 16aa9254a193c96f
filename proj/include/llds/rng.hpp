#pragma once

#include <cstdint>

namespace llds {

// Every random choice in the library flows from a single 64-bit seed through
// this generator, so identical (argv, seed) pairs replay bit-identically.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

private:
  std::uint64_t state_;
};

// Deterministic per-shard stream derived from (seed, shard index).
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 a(seed);
  SplitMix64 b(index ^ 0xa5a5a5a5a5a5a5a5ull);
  return SplitMix64(a.next() ^ b.next());
}

}  // namespace llds
