#pragma once

#include <array>
#include <cstdint>

namespace skewsim {

// splitmix64 (Steele, Lea & Flood). Used to expand seeds and to derive
// per-trial stream seeds; never used as the main generator.
inline std::uint64_t splitmix64_next(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// xoshiro256** 1.0 (Blackman & Vigna, public domain), state seeded through
/// splitmix64. The output sequence for a given seed is fixed across
/// platforms and for all future versions: reports promise byte-identical
/// results for identical seeds.
class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) noexcept {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64_next(s);
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53 random bits.
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// True with probability p. p <= 0 never fires, p >= 1 always fires.
  bool bernoulli(double p) noexcept { return next_double() < p; }

  /// Uniform integer in [0, bound), bound >= 1. Unbiased (rejection).
  std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

/// Seed of the independent stream for (seed, index). Trial RNGs depend only
/// on (seed, trial index), never on execution order, so parallel sweeps stay
/// reproducible.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t s = seed;
  return splitmix64_next(s) ^ (0x9E3779B97F4A7C15ULL * (index + 1));
}

inline Xoshiro256StarStar derive_stream(std::uint64_t seed, std::uint64_t index) noexcept {
  return Xoshiro256StarStar(derive_seed(seed, index));
}

}  // namespace skewsim
