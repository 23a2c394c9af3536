#pragma once

#include <cstdint>

namespace bihilb::fp {

/// Counter-based SplitMix64 stream: the k-th output (k = 0, 1, ...) is
/// mix64(seed + (k + 1) * 0x9E3779B97F4A7C15), where mix64 is the SplitMix64
/// finalizer. Outputs depend only on (seed, k), so streams reproduce exactly
/// on every platform.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t next() { return mix64(seed_ + (++counter_) * 0x9E3779B97F4A7C15ull); }

  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t uniform(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace bihilb::fp
