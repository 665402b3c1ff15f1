#pragma once

#include <cstdint>

namespace hytor {

// SplitMix64: tiny, seedable, and identical on every platform, unlike the
// distributions in <random>.  Used everywhere a reproducible stream is
// needed so reports can cite a single integer seed.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) by rejection; bound must be nonzero.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

private:
  std::uint64_t state_;
};

}  // namespace hytor
