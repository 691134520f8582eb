#pragma once

#include <cstdint>

namespace pavsec {

// splitmix64 output function.
constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derives the seed of an independent stream (per trial, per sweep row, ...).
constexpr std::uint64_t fold_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix_finalize(splitmix_finalize(seed + 0x9E3779B97F4A7C15ull) ^
                           (stream + 0xD1B54A32D192ED03ull));
}

// Counter-based generator: draw k is a pure function of (seed, k). Only
// integer arithmetic, so identical seeds replay identical sequences on any
// platform and any number of workers.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64() {
    return splitmix_finalize(seed_ + (++counter_) * 0x9E3779B97F4A7C15ull);
  }

  // Unbiased draw from [0, bound); requires bound >= 1. Multiply-shift with
  // rejection of the biased low range.
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next_u64()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace pavsec
