#pragma once

#include <cstdint>

#include "smallcut/bits.hpp"

namespace smallcut {

// splitmix64: tiny, portable, and good enough for sampling circulations.
// Every consumer gets the algorithm name, the seed, and the draw position so
// runs can be reproduced and logged.
class Prng {
 public:
  explicit Prng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  static const char* algorithm() { return "splitmix64"; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t position() const { return position_; }

  std::uint64_t next_u64() {
    ++position_;
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n > 0. Rejection sampling keeps it unbiased.
  std::uint64_t next_below(std::uint64_t n) {
    std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % n;
  }

  bool next_bit() { return next_u64() & 1; }

  BitVec next_bits(int width) {
    BitVec b(width);
    for (int i = 0; i < width; i += 64) {
      std::uint64_t w = next_u64();
      for (int j = 0; j < 64 && i + j < width; ++j)
        if ((w >> j) & 1) b.set(i + j, true);
    }
    return b;
  }

  // Derives an independent stream, e.g. one per node id. Two finalizer rounds
  // so nearby (seed, stream) pairs land far apart.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    z ^= z >> 31;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  std::uint64_t position_ = 0;
};

inline int ceil_log2(std::uint64_t x) {
  int b = 0;
  while (b < 64 && (std::uint64_t{1} << b) < x) ++b;
  return b;
}

}  // namespace smallcut
