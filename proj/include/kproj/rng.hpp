#pragma once

#include <cstdint>

namespace kproj {

// splitmix64 (Steele/Lea/Flood). Advances `state` and returns the next
// output. Used for seed expansion and for mixing parameter tuples into
// per-trial seeds; the sequence is fixed by the algorithm, so seeds are
// portable across platforms and compilers.
inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// First output of the splitmix64 stream seeded at x.
inline uint64_t mix64(uint64_t x) { return splitmix64_next(x); }

// xoshiro256** 1.0 (Blackman & Vigna), state seeded from splitmix64 as the
// authors recommend. All random dataset generation goes through this
// generator, so identical seeds give identical datasets everywhere.
class Xoshiro256 {
 public:
  explicit Xoshiro256(uint64_t seed) {
    for (auto& word : state_) word = splitmix64_next(seed);
  }

  uint64_t next() {
    const uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, bound) by rejection, so the draw is unbiased.
  uint64_t below(uint64_t bound) {
    const uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      const uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  uint64_t state_[4];
};

}  // namespace kproj
