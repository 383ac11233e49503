#pragma once

#include <cstdint>
#include <random>

namespace dominion {

/// Seeded generator shared by every randomized routine (random trees, random
/// deletion sets). std::mt19937_64 has a fully specified output sequence, and
/// uniform_index() avoids std::uniform_int_distribution, whose mapping is
/// implementation-defined, so corpora reproduce across toolchains.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Unbiased draw from [0, bound) by rejection; bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dominion
