#pragma once

#include <cstdint>
#include <random>

namespace wellmix {

// Deterministic random source. std::mt19937_64 has a standard-mandated
// output sequence, and bounded draws use rejection sampling rather than
// std::uniform_int_distribution (whose mapping is implementation-defined),
// so identical seeds give identical streams on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Unbiased draw from [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (-n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t v = next();
      if (v >= threshold) return v % n;
    }
  }

  bool coin(std::uint64_t one_in) { return below(one_in) == 0; }

  // SplitMix64 step; used to derive independent per-trial seeds from a
  // master seed without consuming engine state.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wellmix
