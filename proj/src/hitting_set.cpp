#include "kproj/hitting_set.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "kproj/bits.hpp"

namespace kproj {
namespace {

std::vector<int> mask_to_elements(uint64_t mask) {
  std::vector<int> out;
  while (mask != 0) {
    out.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

HittingSetInstance::HittingSetInstance(int universe_size, std::vector<uint64_t> sets,
                                       std::optional<int> budget)
    : universe_(universe_size), sets_(std::move(sets)), budget_(budget) {
  if (universe_ < 1) throw InputError("universe must be nonempty");
  if (universe_ > 64)
    throw ResourceError("universe size " + std::to_string(universe_) +
                        " exceeds the 64-element bitmask limit");
  const uint64_t valid = universe_ == 64 ? ~0ull : (1ull << universe_) - 1;
  for (uint64_t set : sets_) {
    if ((set & ~valid) != 0)
      throw InputError("set element outside universe of size " +
                       std::to_string(universe_));
    if (set == 0) unhittable_ = true;
  }
}

HittingSetInstance HittingSetInstance::parse(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("missing header line \"n m\"");
  std::istringstream header(line);
  int n = 0, m = 0;
  if (!(header >> n >> m)) throw InputError("header must be \"n m\"");
  if (m < 0) throw InputError("negative set count");
  std::vector<uint64_t> sets;
  sets.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!std::getline(in, line))
      throw InputError("expected " + std::to_string(m) + " set lines");
    std::istringstream row(line);
    uint64_t mask = 0;
    int element;
    while (row >> element) {
      if (element < 0 || element >= n)
        throw InputError("element " + std::to_string(element) +
                         " outside universe [0, " + std::to_string(n) + ")");
      mask |= 1ull << element;
    }
    sets.push_back(mask);
  }
  return HittingSetInstance(n, std::move(sets));
}

int HittingSetInstance::max_set_size() const {
  int d = 0;
  for (uint64_t set : sets_) d = std::max(d, __builtin_popcountll(set));
  return d;
}

HittingSetInstance from_noncontainment(const StringSet& s, std::span<const Symbol> x) {
  const int n = s.length();
  if (static_cast<int>(x.size()) != n)
    throw InputError("string length " + std::to_string(x.size()) +
                     " differs from set length " + std::to_string(n));
  if (n > 64)
    throw ResourceError("non-containment reduction requires n <= 64");
  std::vector<uint64_t> sets;
  sets.reserve(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i) {
    uint64_t mask = 0;
    for (int col = 0; col < n; ++col)
      if (s.symbol(i, col) != x[static_cast<size_t>(col)]) mask |= 1ull << col;
    sets.push_back(mask);
  }
  return HittingSetInstance(n, std::move(sets));
}

HittingSetInstance from_noncontainment_digits(const StringSet& s, std::string_view x) {
  auto symbols = digits_to_symbols(x, s.alphabet());
  return from_noncontainment(s, symbols);
}

std::pair<StringSet, std::string> to_noncontainment(const HittingSetInstance& h) {
  if (h.unhittable())
    throw InputError("indicator reduction rejects instances with empty sets");
  if (h.sets().empty()) throw InputError("indicator reduction needs at least one set");

  // Duplicate sets carry no extra information; the indicator family has set
  // semantics.
  std::vector<uint64_t> unique_sets(h.sets());
  std::sort(unique_sets.begin(), unique_sets.end());
  unique_sets.erase(std::unique(unique_sets.begin(), unique_sets.end()),
                    unique_sets.end());

  const int n = h.universe();
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(unique_sets.size());
  for (uint64_t set : unique_sets) {
    std::vector<Symbol> row(static_cast<size_t>(n), 0);
    for (int e : mask_to_elements(set)) row[static_cast<size_t>(e)] = 1;
    rows.push_back(std::move(row));
  }
  StringSet strings = StringSet::from_symbols(n, 2, std::move(rows));
  return {std::move(strings), std::string(static_cast<size_t>(n), '0')};
}

namespace {

// Greedy count of pairwise disjoint unhit sets; a lower bound on how many
// more hitters are needed.
int disjoint_lower_bound(const std::vector<uint64_t>& sets, uint64_t chosen) {
  uint64_t used = 0;
  int count = 0;
  for (uint64_t set : sets) {
    if ((set & chosen) != 0) continue;  // already hit
    if ((set & used) != 0) continue;
    used |= set;
    ++count;
  }
  return count;
}

struct ExactSearch {
  const std::vector<uint64_t>& sets;
  std::vector<int> best;
  size_t best_size = std::numeric_limits<size_t>::max();
  std::vector<int> current;

  void run(uint64_t chosen) {
    // Smallest unhit set; ties go to construction order.
    const uint64_t* branch_set = nullptr;
    int branch_popcount = std::numeric_limits<int>::max();
    for (const uint64_t& set : sets) {
      if ((set & chosen) != 0) continue;
      const int pc = __builtin_popcountll(set);
      if (pc < branch_popcount) {
        branch_popcount = pc;
        branch_set = &set;
      }
    }
    if (branch_set == nullptr) {
      // Everything hit: candidate solution.
      std::vector<int> candidate(current);
      std::sort(candidate.begin(), candidate.end());
      if (candidate.size() < best_size ||
          (candidate.size() == best_size &&
           std::lexicographical_compare(candidate.begin(), candidate.end(),
                                        best.begin(), best.end()))) {
        best = std::move(candidate);
        best_size = best.size();
      }
      return;
    }
    const int lb = disjoint_lower_bound(sets, chosen);
    // Keep exploring ties so the reported optimum is lexicographically least.
    if (current.size() + static_cast<size_t>(lb) > best_size) return;

    for (int e : mask_to_elements(*branch_set)) {
      current.push_back(e);
      run(chosen | (1ull << e));
      current.pop_back();
    }
  }
};

}  // namespace

HittingSetSolution solve_exact(const HittingSetInstance& h) {
  HittingSetSolution solution;
  if (h.unhittable()) {
    solution.unhittable = true;
    return solution;
  }
  ExactSearch search{h.sets(), {}, std::numeric_limits<size_t>::max(), {}};
  search.run(0);
  solution.hitters = std::move(search.best);
  solution.optimal = true;
  return solution;
}

namespace {

bool fpt_search(const std::vector<uint64_t>& sets, int k, uint64_t chosen,
                std::vector<int>& picked) {
  const uint64_t* unhit = nullptr;
  for (const uint64_t& set : sets) {
    if ((set & chosen) == 0) {
      unhit = &set;
      break;
    }
  }
  if (unhit == nullptr) return true;
  if (static_cast<int>(picked.size()) >= k) return false;
  for (int e : mask_to_elements(*unhit)) {
    picked.push_back(e);
    if (fpt_search(sets, k, chosen | (1ull << e), picked)) return true;
    picked.pop_back();
  }
  return false;
}

}  // namespace

std::optional<HittingSetSolution> solve_fpt(const HittingSetInstance& h, int k) {
  if (h.unhittable()) return std::nullopt;
  if (k < 0) return std::nullopt;
  std::vector<int> picked;
  if (!fpt_search(h.sets(), k, 0, picked)) return std::nullopt;
  HittingSetSolution solution;
  std::sort(picked.begin(), picked.end());
  solution.hitters = std::move(picked);
  return solution;
}

ApproxResult approx_d(const HittingSetInstance& h) {
  ApproxResult result;
  if (h.unhittable()) {
    result.solution.unhittable = true;
    return result;
  }
  uint64_t chosen = 0;
  for (size_t i = 0; i < h.sets().size(); ++i) {
    const uint64_t set = h.sets()[i];
    if ((set & chosen) != 0) continue;
    chosen |= set;
    result.picked_sets.push_back(static_cast<int>(i));
  }
  result.solution.hitters = mask_to_elements(chosen);
  return result;
}

std::optional<int> min_exclusion_k(const StringSet& s, std::span<const Symbol> x) {
  const HittingSetInstance instance = from_noncontainment(s, x);
  if (instance.unhittable()) return std::nullopt;  // x in S: never excluded
  return static_cast<int>(solve_exact(instance).hitters.size());
}

std::optional<int> min_exclusion_k_digits(const StringSet& s, std::string_view x) {
  auto symbols = digits_to_symbols(x, s.alphabet());
  return min_exclusion_k(s, symbols);
}

bool excluded_at(const StringSet& s, std::span<const Symbol> x, int k) {
  const HittingSetInstance instance = from_noncontainment(s, x);
  if (instance.unhittable()) return false;
  return solve_fpt(instance, k).has_value();
}

namespace {

std::string double_chars(std::string_view x) {
  std::string out;
  out.reserve(x.size() * 2);
  for (char c : x) {
    out += c;
    out += c;
  }
  return out;
}

std::string pair_encode(std::string_view y, int alphabet) {
  std::string out;
  out.reserve(y.size() * 2);
  for (char c : y) {
    const int v = c - '0';
    out += c;
    out += static_cast<char>('0' + (v + 1) % alphabet);
  }
  return out;
}

}  // namespace

PaddedInstance pad_instance(const StringSet& s, std::string_view x, int k,
                            std::string_view y) {
  const int n = s.length();
  const int a = s.alphabet();
  if (static_cast<int>(x.size()) != n)
    throw InputError("string length differs from set length");
  digits_to_symbols(x, a);  // validates symbols
  digits_to_symbols(y, a);
  if (k < 1 || k > n) throw InputError("k out of range");

  const std::string suffix = pair_encode(y, a);
  std::vector<std::string> rows;
  rows.reserve(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i)
    rows.push_back(double_chars(s.row_digits(i)) + suffix);

  PaddedInstance padded;
  padded.set = StringSet(2 * n + 2 * static_cast<int>(y.size()), a, rows);
  padded.x = double_chars(x) + suffix;
  padded.k = k;
  return padded;
}

std::string unpad(const PaddedInstance& padded) {
  const std::string& x = padded.x;
  const int a = padded.set.alphabet();
  if (x.size() % 2 != 0) throw InputError("malformed padding: odd length");
  digits_to_symbols(x, a);  // validates symbols

  // Longest suffix of (c, c+1 mod a) pairs; doubled characters (c, c) can
  // never match that form because the alphabet has at least two symbols.
  size_t start = x.size();
  while (start >= 2) {
    const int first = x[start - 2] - '0';
    const int second = x[start - 1] - '0';
    if (second != (first + 1) % a) break;
    start -= 2;
  }
  std::string y;
  for (size_t i = start; i < x.size(); i += 2) y += x[i];
  return y;
}

bool toggled_decision(const HittingSetInstance& h, int k, const EnumGuard& guard) {
  const int n = h.universe();
  unsigned __int128 space = 1;
  for (int i = 0; i < n; ++i) {
    space *= 2;
    if (space > guard.cap)
      throw ResourceError("toggled_decision: 2^universe exceeds the enumeration cap");
  }

  std::unordered_set<uint64_t> family(h.sets().begin(), h.sets().end());
  std::vector<uint64_t> toggled(h.sets().size());
  for (uint64_t x = 0; x < static_cast<uint64_t>(space); ++x) {
    if (family.count(x)) continue;
    for (size_t i = 0; i < h.sets().size(); ++i) toggled[i] = h.sets()[i] ^ x;
    // X differs from every set, so no toggled set is empty.
    HittingSetInstance instance(n, toggled);
    if (!solve_fpt(instance, k).has_value()) return false;
  }
  return true;
}

}  // namespace kproj
