#pragma once

#include <cstdint>

namespace gspk {

// One round of the SplitMix64 output permutation (Steele, Lea & Flood,
// "Fast splittable pseudorandom number generators", OOPSLA 2014).
// Bijective on 64-bit words; doubles as the seed-derivation hash below.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// SplitMix64 generator. The state is a plain counter advanced by a fixed
// odd increment, so the stream is fully determined by the seed and is
// identical across platforms and compilers (no distribution objects, no
// implementation-defined behavior).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  /// Uniform in [0,1), 53 significant bits.
  double next_double() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [0,bound), bound > 0, unbiased (rejection sampling).
  std::uint64_t next_below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

// Deterministic per-object seed derived from (master, tag, index) by
// chaining the mix permutation. Every generated graph and every CV fold
// gets its own stream, so datasets are order-independent and safe to
// produce from multiple threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t tag,
                                 std::uint64_t index) noexcept {
  std::uint64_t h = mix64(master + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (tag + 0x9e3779b97f4a7c15ULL));
  h = mix64(h ^ (index + 0x9e3779b97f4a7c15ULL));
  return h;
}

}  // namespace gspk
