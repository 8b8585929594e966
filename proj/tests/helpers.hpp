#pragma once

#include <string>
#include <vector>

#include "kproj/bench.hpp"
#include "kproj/rng.hpp"
#include "kproj/string_set.hpp"

namespace kproj::testutil {

// The three-string example set used across the suite.
inline StringSet fig1() { return StringSet(3, 2, {"001", "011", "100"}); }

// Four strings of length five whose perfect point is 3.
inline StringSet fig3() {
  return StringSet(5, 2, {"00111", "10111", "11000", "10100"});
}

// Standard basis vectors e_1..e_n.
inline StringSet basis(int n) {
  std::vector<std::string> rows;
  for (int i = 0; i < n; ++i) {
    std::string row(static_cast<size_t>(n), '0');
    row[static_cast<size_t>(i)] = '1';
    rows.push_back(row);
  }
  return StringSet(n, 2, rows);
}

// All length-n binary strings of even parity.
inline StringSet parity(int n) {
  std::vector<std::string> rows;
  for (uint64_t v = 0; v < (1ull << n); ++v) {
    if (__builtin_popcountll(v) % 2 != 0) continue;
    std::string row(static_cast<size_t>(n), '0');
    for (int j = 0; j < n; ++j)
      row[static_cast<size_t>(j)] = ((v >> (n - 1 - j)) & 1) ? '1' : '0';
    rows.push_back(row);
  }
  return StringSet(n, 2, rows);
}

inline StringSet all_strings(int n) {
  std::vector<std::string> rows;
  for (uint64_t v = 0; v < (1ull << n); ++v) {
    std::string row(static_cast<size_t>(n), '0');
    for (int j = 0; j < n; ++j)
      row[static_cast<size_t>(j)] = ((v >> (n - 1 - j)) & 1) ? '1' : '0';
    rows.push_back(row);
  }
  return StringSet(n, 2, rows);
}

// Random binary set with n in [2, max_n], m in [1, min(max_m, 2^n)].
inline StringSet random_set(Xoshiro256& rng, int max_n, int max_m) {
  const int n = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(max_n - 1)));
  const uint64_t cap = n >= 31 ? static_cast<uint64_t>(max_m) : (1ull << n);
  const uint64_t m_cap = std::min<uint64_t>(static_cast<uint64_t>(max_m), cap);
  const int m = 1 + static_cast<int>(rng.below(m_cap));
  return gen_random_set(n, m, rng.next());
}

// Random set over an alphabet of the given size (distinct rows); m is
// clamped to the number of available strings.
inline StringSet random_general(Xoshiro256& rng, int n, int m, int alphabet) {
  uint64_t space = 1;
  for (int j = 0; j < n && space <= static_cast<uint64_t>(m); ++j)
    space *= static_cast<uint64_t>(alphabet);
  m = static_cast<int>(std::min<uint64_t>(static_cast<uint64_t>(m), space));
  std::vector<std::vector<Symbol>> rows;
  std::vector<std::vector<Symbol>> sorted;
  while (static_cast<int>(rows.size()) < m) {
    std::vector<Symbol> row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      row[static_cast<size_t>(j)] =
          static_cast<Symbol>(rng.below(static_cast<uint64_t>(alphabet)));
    auto it = std::lower_bound(sorted.begin(), sorted.end(), row);
    if (it != sorted.end() && *it == row) continue;
    sorted.insert(it, row);
    rows.push_back(std::move(row));
  }
  return StringSet::from_symbols(n, alphabet, std::move(rows));
}

inline std::vector<std::string> member_rows(const StringSet& s) {
  std::vector<std::string> rows;
  for (int i = 0; i < s.size(); ++i) rows.push_back(s.row_digits(i));
  return rows;
}

}  // namespace kproj::testutil
