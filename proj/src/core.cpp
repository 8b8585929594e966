#include "kproj/core.hpp"

#include <algorithm>
#include <numeric>

#include "kproj/bits.hpp"
#include "kproj/twosat.hpp"

namespace kproj {
namespace {

void check_k(int k, int n) {
  if (k < 1 || k > n)
    throw InputError("k=" + std::to_string(k) + " out of range [1, " +
                     std::to_string(n) + "]");
}

std::vector<Symbol> decode_candidate(uint64_t value, int n, int alphabet) {
  std::vector<Symbol> row(static_cast<size_t>(n));
  for (int j = n - 1; j >= 0; --j) {
    row[static_cast<size_t>(j)] =
        static_cast<Symbol>(value % static_cast<uint64_t>(alphabet));
    value /= static_cast<uint64_t>(alphabet);
  }
  return row;
}

// Pattern of candidate `value` (a base-a row key) on the given window.
struct WindowExtractor {
  std::vector<uint64_t> divisor;  // a^(n-1-col) per window slot
  int alphabet;

  WindowExtractor(const std::vector<int>& window, int n, int a) : alphabet(a) {
    divisor.reserve(window.size());
    for (int col : window)
      divisor.push_back(ipow_sat(static_cast<uint64_t>(a), n - 1 - col));
  }

  uint64_t pattern(uint64_t value) const {
    uint64_t p = 0;
    for (uint64_t d : divisor)
      p = p * static_cast<uint64_t>(alphabet) +
          (value / d) % static_cast<uint64_t>(alphabet);
    return p;
  }
};

}  // namespace

uint64_t candidate_space(const StringSet& s, const EnumGuard& guard,
                         const char* operation) {
  unsigned __int128 space = 1;
  for (int i = 0; i < s.length(); ++i) {
    space *= static_cast<unsigned>(s.alphabet());
    if (space > guard.cap)
      throw ResourceError(std::string(operation) + ": alphabet^n exceeds the " +
                          "enumeration cap of " + std::to_string(guard.cap) +
                          " (raise the cap to force this)");
  }
  return static_cast<uint64_t>(space);
}

Projection project(const StringSet& s, const Window& w) {
  w.check_against(s.length());
  std::vector<uint64_t> patterns;
  patterns.reserve(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i)
    patterns.push_back(pack_pattern(s.row(i), w, s.alphabet()));
  std::sort(patterns.begin(), patterns.end());
  patterns.erase(std::unique(patterns.begin(), patterns.end()), patterns.end());
  return Projection{w, std::move(patterns)};
}

MemberResult is_member(const StringSet& s, std::span<const Symbol> x, int k) {
  const int n = s.length();
  check_k(k, n);
  if (static_cast<int>(x.size()) != n)
    throw InputError("string length " + std::to_string(x.size()) +
                     " differs from set length " + std::to_string(n));
  for (Symbol v : x) {
    if (v >= s.alphabet())
      throw InputError("symbol outside the set's alphabet");
  }

  const int m = s.size();
  MemberResult result;
  result.member = true;

  if (s.binary_packed()) {
    uint64_t xw = 0;
    for (int j = 0; j < n; ++j)
      xw |= static_cast<uint64_t>(x[static_cast<size_t>(j)]) << (n - 1 - j);
    for_each_combination(n, k, [&](const std::vector<int>& combo) {
      uint64_t mask = 0;
      for (int col : combo) mask |= 1ull << (n - 1 - col);
      for (int i = 0; i < m; ++i) {
        if (((s.packed_row(i) ^ xw) & mask) == 0) return true;  // window agrees
      }
      result.member = false;
      result.witness = Window(combo);
      return false;
    });
    return result;
  }

  for_each_combination(n, k, [&](const std::vector<int>& combo) {
    for (int i = 0; i < m; ++i) {
      bool agree = true;
      for (int col : combo) {
        if (s.symbol(i, col) != x[static_cast<size_t>(col)]) {
          agree = false;
          break;
        }
      }
      if (agree) return true;
    }
    result.member = false;
    result.witness = Window(combo);
    return false;
  });
  return result;
}

MemberResult is_member_digits(const StringSet& s, std::string_view x, int k) {
  auto symbols = digits_to_symbols(x, s.alphabet());
  return is_member(s, symbols, k);
}

namespace {

ReconReport report_from_survivors(const StringSet& s, int k,
                                  const Bitset& alive, uint64_t survivors) {
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(survivors);
  for (uint64_t v = 0; v < alive.size(); ++v)
    if (alive.test(v)) rows.push_back(decode_candidate(v, s.length(), s.alphabet()));
  ReconReport report;
  report.k = k;
  report.members = StringSet::from_symbols(s.length(), s.alphabet(), std::move(rows));
  report.extras = static_cast<int>(survivors) - s.size();
  return report;
}

ReconReport recon_brute_impl(const StringSet& s, int k, const EnumGuard& guard,
                             bool parallel) {
  const int n = s.length();
  const int m = s.size();
  check_k(k, n);
  const uint64_t space = candidate_space(s, guard, "recon_brute");

  Bitset alive(space, true);
  uint64_t survivors = space;

  for_each_combination(n, k, [&](const std::vector<int>& combo) {
    // Patterns of the input set in this window.
    const uint64_t pattern_space = ipow_sat(s.alphabet(), k);
    Bitset present(pattern_space, false);
    Window w{std::vector<int>(combo)};
    for (int i = 0; i < m; ++i) present.set(pack_pattern(s.row(i), w, s.alphabet()));

    WindowExtractor extract(combo, n, s.alphabet());
    const int64_t words = static_cast<int64_t>(alive.word_count());
#pragma omp parallel for schedule(static) if (parallel)
    for (int64_t wi = 0; wi < words; ++wi) {
      uint64_t bits = alive.word(static_cast<size_t>(wi));
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        bits &= bits - 1;
        const uint64_t value = static_cast<uint64_t>(wi) * 64 + static_cast<uint64_t>(bit);
        if (!present.test(extract.pattern(value)))
          alive.word(static_cast<size_t>(wi)) &= ~(1ull << bit);
      }
    }
    survivors = alive.count();
    // The input strings survive every window, so once only m candidates are
    // left the reconstruction cannot shrink further.
    return survivors > static_cast<uint64_t>(m);
  });

  return report_from_survivors(s, k, alive, survivors);
}

}  // namespace

ReconReport recon_brute(const StringSet& s, int k, const EnumGuard& guard,
                        bool parallel) {
  return recon_brute_impl(s, k, guard, parallel);
}

ReconReport recon_brute_reference(const StringSet& s, int k, const EnumGuard& guard) {
  const int n = s.length();
  check_k(k, n);
  const uint64_t space = candidate_space(s, guard, "recon_brute");
  std::vector<std::vector<Symbol>> rows;
  for (uint64_t v = 0; v < space; ++v) {
    auto candidate = decode_candidate(v, n, s.alphabet());
    if (is_member(s, candidate, k).member) rows.push_back(std::move(candidate));
  }
  ReconReport report;
  report.k = k;
  report.members = StringSet::from_symbols(n, s.alphabet(), std::move(rows));
  report.extras = report.members.size() - s.size();
  return report;
}

int point_of_no_information(const StringSet& s) {
  const int n = s.length();
  const int m = s.size();
  const uint64_t a = static_cast<uint64_t>(s.alphabet());

  int k = 1;
  for (; k <= n; ++k) {
    const uint64_t needed = ipow_sat(a, k);
    // Fewer strings than patterns: some pattern is missing from any window.
    if (static_cast<uint64_t>(m) < needed) break;

    const bool complete = for_each_combination(n, k, [&](const std::vector<int>& combo) {
      Window w{std::vector<int>(combo)};
      Bitset seen(needed, false);
      uint64_t distinct = 0;
      for (int i = 0; i < m; ++i) {
        const uint64_t p = pack_pattern(s.row(i), w, s.alphabet());
        if (!seen.test(p)) {
          seen.set(p);
          ++distinct;
        }
      }
      return distinct == needed;  // keep scanning while windows are complete
    });
    if (!complete) break;
  }
  return k - 1;
}

bool is_1_reconstructible(const StringSet& s) {
  const int n = s.length();
  const int m = s.size();
  uint64_t product = 1;
  std::vector<char> seen(static_cast<size_t>(s.alphabet()));
  for (int col = 0; col < n; ++col) {
    std::fill(seen.begin(), seen.end(), 0);
    uint64_t distinct = 0;
    for (int i = 0; i < m; ++i) {
      Symbol v = s.symbol(i, col);
      if (!seen[v]) {
        seen[v] = 1;
        ++distinct;
      }
    }
    product = sat_mul(product, distinct);
    if (product > static_cast<uint64_t>(m)) return false;  // early stop
  }
  return product == static_cast<uint64_t>(m);
}

bool is_2_reconstructible(const StringSet& s) {
  if (s.alphabet() != 2)
    throw UnsupportedError(
        "the pairwise-constraint fast path is only defined for binary alphabets");
  const int n = s.length();
  const int m = s.size();

  TwoSat formula(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      unsigned present = 0;
      for (int r = 0; r < m; ++r)
        present |= 1u << ((s.symbol(r, i) << 1) | s.symbol(r, j));
      if (present == 0xF) continue;  // all four pairs occur: no constraint
      for (unsigned p = 0; p < 4; ++p) {
        if (present & (1u << p)) continue;
        const bool bit_i = (p >> 1) & 1;
        const bool bit_j = p & 1;
        // Exclude the absent pair (bit_i, bit_j).
        formula.add_clause(i, !bit_i, j, !bit_j);
      }
    }
  }

  // S is always contained in its 2-reconstruction, so exactly m solutions
  // means the reconstruction is S itself.
  const uint64_t limit = static_cast<uint64_t>(m) + 1;
  return formula.enumerate(limit) == static_cast<uint64_t>(m);
}

namespace {

int hamming_radius_impl(const StringSet& s, const EnumGuard& guard, bool parallel) {
  const int n = s.length();
  const int m = s.size();
  const uint64_t space = candidate_space(s, guard, "hamming_radius");

  int radius = 0;
  if (s.binary_packed()) {
#pragma omp parallel for schedule(static) reduction(max : radius) if (parallel)
    for (int64_t v = 0; v < static_cast<int64_t>(space); ++v) {
      int best = n + 1;
      for (int i = 0; i < m; ++i) {
        const int d = __builtin_popcountll(static_cast<uint64_t>(v) ^ s.packed_row(i));
        best = std::min(best, d);
        if (best == 0) break;
      }
      radius = std::max(radius, best);
    }
    return radius;
  }

#pragma omp parallel for schedule(static) reduction(max : radius) if (parallel)
  for (int64_t v = 0; v < static_cast<int64_t>(space); ++v) {
    const auto candidate = decode_candidate(static_cast<uint64_t>(v), n, s.alphabet());
    int best = n + 1;
    for (int i = 0; i < m; ++i) {
      int d = 0;
      for (int j = 0; j < n; ++j)
        d += candidate[static_cast<size_t>(j)] != s.symbol(i, j);
      best = std::min(best, d);
      if (best == 0) break;
    }
    radius = std::max(radius, best);
  }
  return radius;
}

}  // namespace

int hamming_radius(const StringSet& s, const EnumGuard& guard) {
  return hamming_radius_impl(s, guard, true);
}

int hamming_radius_serial(const StringSet& s, const EnumGuard& guard) {
  return hamming_radius_impl(s, guard, false);
}

SparsityBound sparsity_bound(const StringSet& s) {
  const int n = s.length();
  const int m = s.size();

  std::vector<int> minority(static_cast<size_t>(n));
  std::string witness(static_cast<size_t>(n), '0');
  std::vector<int> counts(static_cast<size_t>(s.alphabet()));
  for (int col = 0; col < n; ++col) {
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < m; ++i) ++counts[s.symbol(i, col)];
    // Majority symbol; ties go to the lowest symbol value.
    int majority = 0;
    for (int v = 1; v < s.alphabet(); ++v)
      if (counts[static_cast<size_t>(v)] > counts[static_cast<size_t>(majority)])
        majority = v;
    witness[static_cast<size_t>(col)] = static_cast<char>('0' + majority);
    minority[static_cast<size_t>(col)] = m - counts[static_cast<size_t>(majority)];
  }

  // Sort columns by minority count, largest first; ties by column index.
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return minority[static_cast<size_t>(a)] > minority[static_cast<size_t>(b)];
  });

  // Longest prefix with sum(d_i) < m, i.e. sum(d_i/m) < 1.
  int bound = 0;
  long long sum = 0;
  for (int i = 0; i < n; ++i) {
    sum += minority[static_cast<size_t>(order[static_cast<size_t>(i)])];
    if (sum < m)
      bound = i + 1;
    else
      break;
  }
  return SparsityBound{bound, witness};
}

ReconReport recon_product(const StringSet& s, const EnumGuard& guard) {
  const int n = s.length();
  const int m = s.size();

  std::vector<std::vector<Symbol>> column_symbols(static_cast<size_t>(n));
  for (int col = 0; col < n; ++col) {
    std::vector<char> seen(static_cast<size_t>(s.alphabet()), 0);
    for (int i = 0; i < m; ++i) seen[s.symbol(i, col)] = 1;
    for (int v = 0; v < s.alphabet(); ++v)
      if (seen[static_cast<size_t>(v)])
        column_symbols[static_cast<size_t>(col)].push_back(static_cast<Symbol>(v));
  }

  unsigned __int128 total = 1;
  for (const auto& syms : column_symbols) {
    total *= syms.size();
    if (total > guard.cap)
      throw ResourceError("recon_product: product set exceeds the enumeration cap");
  }

  std::vector<std::vector<Symbol>> rows;
  rows.reserve(static_cast<size_t>(total));
  std::vector<size_t> odometer(static_cast<size_t>(n), 0);
  for (;;) {
    std::vector<Symbol> row(static_cast<size_t>(n));
    for (int col = 0; col < n; ++col)
      row[static_cast<size_t>(col)] =
          column_symbols[static_cast<size_t>(col)][odometer[static_cast<size_t>(col)]];
    rows.push_back(std::move(row));
    int col = n - 1;
    while (col >= 0 &&
           ++odometer[static_cast<size_t>(col)] ==
               column_symbols[static_cast<size_t>(col)].size()) {
      odometer[static_cast<size_t>(col)] = 0;
      --col;
    }
    if (col < 0) break;
  }

  ReconReport report;
  report.k = 1;
  report.members = StringSet::from_symbols(n, s.alphabet(), std::move(rows));
  report.extras = report.members.size() - m;
  return report;
}

}  // namespace kproj
