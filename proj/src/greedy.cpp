#include "kproj/greedy.hpp"

#include <algorithm>

#include "kproj/bits.hpp"

namespace kproj {
namespace {

// Chain-coordinate packing for the binary path: bit p holds the symbol at
// chain position p, so appending position i just sets bit i.
uint64_t low_mask(int bits) { return bits >= 64 ? ~0ull : (1ull << bits) - 1; }

GreedyResult greedy_binary(const StringSet& s, int k, const ColumnOrdering& ord,
                           bool parallel) {
  const int n = s.length();
  const int m = s.size();

  std::vector<uint64_t> rows(static_cast<size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    uint64_t word = 0;
    for (int p = 0; p < n; ++p)
      word |= static_cast<uint64_t>(
                  s.symbol(i, ord.permutation[static_cast<size_t>(p)]))
              << p;
    rows[static_cast<size_t>(i)] = word;
  }

  GreedyTrace trace;

  // Seed: distinct patterns of the first k chain positions.
  std::vector<uint64_t> frontier;
  frontier.reserve(static_cast<size_t>(m));
  for (uint64_t row : rows) frontier.push_back(row & low_mask(k));
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
  trace.frontier_sizes.push_back(frontier.size());

  std::vector<uint64_t> window_masks;
  for (int i = k; i < n; ++i) {
    window_masks.clear();
    for_each_combination(i, k - 1, [&](const std::vector<int>& subset) {
      uint64_t mask = 1ull << i;
      for (int p : subset) mask |= 1ull << p;
      window_masks.push_back(mask);
      return true;
    });

    // Two candidate slots per partial string keep the output order (and so
    // the result) independent of the thread schedule.
    std::vector<uint64_t> slot(frontier.size() * 2, 0);
    std::vector<char> slot_ok(frontier.size() * 2, 0);
    uint64_t checks = 0;
    const int64_t frontier_count = static_cast<int64_t>(frontier.size());
#pragma omp parallel for schedule(static) reduction(+ : checks) if (parallel)
    for (int64_t f = 0; f < frontier_count; ++f) {
      for (uint64_t sym = 0; sym <= 1; ++sym) {
        const uint64_t candidate = frontier[static_cast<size_t>(f)] | (sym << i);
        bool ok = true;
        for (uint64_t mask : window_masks) {
          ++checks;
          bool match = false;
          for (uint64_t row : rows) {
            if (((candidate ^ row) & mask) == 0) {
              match = true;
              break;
            }
          }
          if (!match) {
            ok = false;
            break;
          }
        }
        if (ok) {
          slot[static_cast<size_t>(f) * 2 + sym] = candidate;
          slot_ok[static_cast<size_t>(f) * 2 + sym] = 1;
        }
      }
    }
    trace.checks += checks;

    std::vector<uint64_t> next;
    next.reserve(frontier.size() * 2);
    for (size_t idx = 0; idx < slot.size(); ++idx)
      if (slot_ok[idx]) next.push_back(slot[idx]);
    frontier = std::move(next);
    trace.frontier_sizes.push_back(frontier.size());
  }

  std::vector<std::vector<Symbol>> members;
  members.reserve(frontier.size());
  for (uint64_t packed : frontier) {
    std::vector<Symbol> row(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p)
      row[static_cast<size_t>(ord.permutation[static_cast<size_t>(p)])] =
          static_cast<Symbol>((packed >> p) & 1);
    members.push_back(std::move(row));
  }
  std::sort(members.begin(), members.end());

  GreedyResult result;
  result.report.k = k;
  result.report.members = StringSet::from_symbols(n, 2, std::move(members));
  result.report.extras = result.report.members.size() - m;
  result.trace = std::move(trace);
  return result;
}

GreedyResult greedy_general(const StringSet& s, int k, const ColumnOrdering& ord,
                            bool parallel) {
  const int n = s.length();
  const int m = s.size();
  const int a = s.alphabet();

  std::vector<std::vector<Symbol>> rows(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p)
      rows[static_cast<size_t>(i)][static_cast<size_t>(p)] =
          s.symbol(i, ord.permutation[static_cast<size_t>(p)]);
  }

  GreedyTrace trace;

  std::vector<std::vector<Symbol>> frontier;
  for (const auto& row : rows)
    frontier.emplace_back(row.begin(), row.begin() + k);
  std::sort(frontier.begin(), frontier.end());
  frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
  trace.frontier_sizes.push_back(frontier.size());

  std::vector<std::vector<int>> windows;
  for (int i = k; i < n; ++i) {
    windows.clear();
    for_each_combination(i, k - 1, [&](const std::vector<int>& subset) {
      std::vector<int> w(subset);
      w.push_back(i);
      windows.push_back(std::move(w));
      return true;
    });

    std::vector<std::vector<Symbol>> slot(frontier.size() *
                                          static_cast<size_t>(a));
    std::vector<char> slot_ok(frontier.size() * static_cast<size_t>(a), 0);
    uint64_t checks = 0;
    const int64_t frontier_count = static_cast<int64_t>(frontier.size());
#pragma omp parallel for schedule(static) reduction(+ : checks) if (parallel)
    for (int64_t f = 0; f < frontier_count; ++f) {
      for (int sym = 0; sym < a; ++sym) {
        std::vector<Symbol> candidate = frontier[static_cast<size_t>(f)];
        candidate.push_back(static_cast<Symbol>(sym));
        bool ok = true;
        for (const auto& window : windows) {
          ++checks;
          bool match = false;
          for (const auto& row : rows) {
            bool agree = true;
            for (int p : window) {
              if (row[static_cast<size_t>(p)] != candidate[static_cast<size_t>(p)]) {
                agree = false;
                break;
              }
            }
            if (agree) {
              match = true;
              break;
            }
          }
          if (!match) {
            ok = false;
            break;
          }
        }
        if (ok) {
          const size_t idx =
              static_cast<size_t>(f) * static_cast<size_t>(a) + static_cast<size_t>(sym);
          slot[idx] = std::move(candidate);
          slot_ok[idx] = 1;
        }
      }
    }
    trace.checks += checks;

    std::vector<std::vector<Symbol>> next;
    next.reserve(frontier.size() * static_cast<size_t>(a));
    for (size_t idx = 0; idx < slot.size(); ++idx)
      if (slot_ok[idx]) next.push_back(std::move(slot[idx]));
    frontier = std::move(next);
    trace.frontier_sizes.push_back(frontier.size());
  }

  std::vector<std::vector<Symbol>> members;
  members.reserve(frontier.size());
  for (const auto& chain : frontier) {
    std::vector<Symbol> row(static_cast<size_t>(n));
    for (int p = 0; p < n; ++p)
      row[static_cast<size_t>(ord.permutation[static_cast<size_t>(p)])] =
          chain[static_cast<size_t>(p)];
    members.push_back(std::move(row));
  }
  std::sort(members.begin(), members.end());

  GreedyResult result;
  result.report.k = k;
  result.report.members = StringSet::from_symbols(n, a, std::move(members));
  result.report.extras = result.report.members.size() - m;
  result.trace = std::move(trace);
  return result;
}

}  // namespace

GreedyResult recon_greedy(const StringSet& s, int k, const GreedyOptions& opts) {
  const int n = s.length();
  if (k < 1 || k > n)
    throw InputError("k=" + std::to_string(k) + " out of range [1, " +
                     std::to_string(n) + "]");
  const ColumnOrdering ord =
      opts.ordering.has_value() ? *opts.ordering : ColumnOrdering::identity(n);
  if (static_cast<int>(ord.permutation.size()) != n)
    throw InputError("column ordering length differs from n");
  if (s.binary_packed()) return greedy_binary(s, k, ord, opts.parallel);
  return greedy_general(s, k, ord, opts.parallel);
}

GreedyResult recon_greedy_serial(const StringSet& s, int k, GreedyOptions opts) {
  opts.parallel = false;
  return recon_greedy(s, k, opts);
}

}  // namespace kproj
