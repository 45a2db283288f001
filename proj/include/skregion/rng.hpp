#pragma once

#include <cstdint>

namespace skregion {

/**
 * SplitMix64 pseudo-random generator (Steele, Lea & Flood 2014).
 *
 * This is the reproducibility contract for every randomized component of
 * the toolkit: a batch or sample stream is fully determined by the 64-bit
 * state it starts from, and independent streams are derived with
 * `deriveStream`. Any reimplementation that seeds the same algorithm with
 * the same values reproduces the sequences bit for bit.
 */
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double nextUnit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// One SplitMix64 output step applied to a bare value.
inline std::uint64_t splitmix64Once(std::uint64_t x) {
  return SplitMix64(x).next();
}

/**
 * Derive the seed of an independent stream from a master seed and up to two
 * stream tags. Defined as
 *   splitmix64(seed) XOR splitmix64(tagA * PHI64 + tagB + 1)
 * with PHI64 = 0x9e3779b97f4a7c15.
 */
inline std::uint64_t deriveStream(std::uint64_t seed, std::uint64_t tagA,
                                  std::uint64_t tagB = 0) {
  return splitmix64Once(seed) ^
         splitmix64Once(tagA * 0x9e3779b97f4a7c15ULL + tagB + 1);
}

}  // namespace skregion
