#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace kproj {

// Visits all size-k subsets of [0, n) in lexicographic order. The callback
// receives the current index vector and returns false to stop early.
// Returns false iff the callback stopped the iteration.
template <typename F>
bool for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  for (;;) {
    if (!f(static_cast<const std::vector<int>&>(idx))) return false;
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - k + pos) --pos;
    if (pos < 0) return true;
    ++idx[static_cast<size_t>(pos)];
    for (int j = pos + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

// C(n, k); exact in uint64 for n <= 64.
inline uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (int i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<uint64_t>(acc);
}

// a^e, saturating at UINT64_MAX.
inline uint64_t ipow_sat(uint64_t a, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (a != 0 && r > std::numeric_limits<uint64_t>::max() / a)
      return std::numeric_limits<uint64_t>::max();
    r *= a;
  }
  return r;
}

inline uint64_t sat_add(uint64_t a, uint64_t b) {
  uint64_t r;
  return __builtin_add_overflow(a, b, &r) ? std::numeric_limits<uint64_t>::max() : r;
}

inline uint64_t sat_mul(uint64_t a, uint64_t b) {
  uint64_t r;
  return __builtin_mul_overflow(a, b, &r) ? std::numeric_limits<uint64_t>::max() : r;
}

// Flat bitset used for candidate sieves; word layout is exposed so scans
// can be chunked across threads.
class Bitset {
 public:
  Bitset(uint64_t size, bool value)
      : size_(size), words_((size + 63) / 64, value ? ~0ull : 0ull) {
    if (value && size % 64 != 0 && !words_.empty())
      words_.back() = (1ull << (size % 64)) - 1;
  }

  bool test(uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void clear(uint64_t i) { words_[i >> 6] &= ~(1ull << (i & 63)); }
  void set(uint64_t i) { words_[i >> 6] |= 1ull << (i & 63); }

  uint64_t size() const { return size_; }
  size_t word_count() const { return words_.size(); }
  uint64_t word(size_t w) const { return words_[w]; }
  uint64_t& word(size_t w) { return words_[w]; }

  uint64_t count() const {
    uint64_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint64_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  uint64_t size_;
  std::vector<uint64_t> words_;
};

}  // namespace kproj
