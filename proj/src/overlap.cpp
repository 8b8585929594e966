#include "kproj/overlap.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

#include "kproj/bits.hpp"
#include "kproj/hitting_set.hpp"

namespace kproj {
namespace {

constexpr uint64_t kSaturated = std::numeric_limits<uint64_t>::max();

uint64_t pack_chain_window(const StringSet& s, int row, const std::vector<int>& window) {
  uint64_t value = 0;
  for (int col : window)
    value = value * static_cast<uint64_t>(s.alphabet()) + s.symbol(row, col);
  return value;
}

Symbol kmer_symbol(uint64_t kmer, int k, int slot, int alphabet) {
  const uint64_t div = ipow_sat(static_cast<uint64_t>(alphabet), k - 1 - slot);
  return static_cast<Symbol>((kmer / div) % static_cast<uint64_t>(alphabet));
}

void check_ordering(const ColumnOrdering& ord, int n) {
  if (ord.size() != n) throw InputError("column ordering length differs from n");
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (int c : ord.permutation) {
    if (c < 0 || c >= n || seen[static_cast<size_t>(c)])
      throw InputError("column ordering is not a permutation of [0, n)");
    seen[static_cast<size_t>(c)] = 1;
  }
}

}  // namespace

size_t OverlapGraph::node_count() const {
  size_t total = 0;
  for (const auto& layer : layers) total += layer.kmers.size();
  return total;
}

size_t OverlapGraph::edge_count() const {
  size_t total = 0;
  for (const auto& layer : layers) total += layer.edge_to.size();
  return total;
}

std::string OverlapGraph::kmer_digits(int layer, int node) const {
  const uint64_t kmer = layers[static_cast<size_t>(layer)].kmers[static_cast<size_t>(node)];
  return pattern_digits(kmer, k, alphabet);
}

OverlapGraph build_graph(const StringSet& s, int k, const ColumnOrdering& ord) {
  const int n = s.length();
  const int a = s.alphabet();
  if (k < 2 || k > n - 1)
    throw InputError("overlap graph needs 2 <= k <= n-1, got k=" + std::to_string(k));
  check_ordering(ord, n);
  if (ipow_sat(static_cast<uint64_t>(a), k) == kSaturated)
    throw ResourceError("k-mer space alphabet^k exceeds 64 bits");

  OverlapGraph g;
  g.n = n;
  g.k = k;
  g.alphabet = a;
  g.layers.resize(static_cast<size_t>(n));

  for (int i = 0; i < n; ++i) {
    auto& layer = g.layers[static_cast<size_t>(i)];
    layer.window.reserve(static_cast<size_t>(k));
    for (int t = 0; t < k; ++t)
      layer.window.push_back(ord.permutation[static_cast<size_t>((i + t) % n)]);
    layer.kmers.reserve(static_cast<size_t>(s.size()));
    for (int r = 0; r < s.size(); ++r)
      layer.kmers.push_back(pack_chain_window(s, r, layer.window));
    std::sort(layer.kmers.begin(), layer.kmers.end());
    layer.kmers.erase(std::unique(layer.kmers.begin(), layer.kmers.end()),
                      layer.kmers.end());
  }

  const uint64_t suffix_mod = ipow_sat(static_cast<uint64_t>(a), k - 1);
  for (int i = 0; i < n; ++i) {
    auto& layer = g.layers[static_cast<size_t>(i)];
    const auto& next = g.layers[static_cast<size_t>((i + 1) % n)].kmers;
    layer.edge_start.assign(layer.kmers.size() + 1, 0);
    for (size_t u = 0; u < layer.kmers.size(); ++u) {
      const uint64_t suffix = layer.kmers[u] % suffix_mod;
      for (int sym = 0; sym < a; ++sym) {
        const uint64_t candidate = suffix * static_cast<uint64_t>(a) +
                                   static_cast<uint64_t>(sym);
        const auto it = std::lower_bound(next.begin(), next.end(), candidate);
        if (it != next.end() && *it == candidate) {
          layer.edge_to.push_back(static_cast<int>(it - next.begin()));
          ++layer.edge_start[u + 1];
        }
      }
    }
    for (size_t u = 0; u < layer.kmers.size(); ++u)
      layer.edge_start[u + 1] += layer.edge_start[u];
  }
  return g;
}

CycleCountTable cycle_counts(const OverlapGraph& g) {
  const int n = g.n;
  std::vector<size_t> t(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) t[static_cast<size_t>(i)] = g.layers[static_cast<size_t>(i)].kmers.size();
  const size_t t0 = t[0];

  // prefix[j][r*t_j + v] = number of length-j paths from node r of layer 0
  // to node v of layer j.
  std::vector<std::vector<uint64_t>> prefix(static_cast<size_t>(n));
  prefix[0].assign(t0 * t0, 0);
  for (size_t r = 0; r < t0; ++r) prefix[0][r * t0 + r] = 1;
  for (int j = 0; j + 1 < n; ++j) {
    const auto& layer = g.layers[static_cast<size_t>(j)];
    const size_t tj = t[static_cast<size_t>(j)];
    const size_t tn = t[static_cast<size_t>(j + 1)];
    auto& out = prefix[static_cast<size_t>(j + 1)];
    out.assign(t0 * tn, 0);
    const auto& in = prefix[static_cast<size_t>(j)];
    for (size_t r = 0; r < t0; ++r) {
      for (size_t v = 0; v < tj; ++v) {
        const uint64_t paths = in[r * tj + v];
        if (paths == 0) continue;
        for (int e = layer.edge_start[v]; e < layer.edge_start[v + 1]; ++e) {
          auto& cell = out[r * tn + static_cast<size_t>(layer.edge_to[static_cast<size_t>(e)])];
          cell = sat_add(cell, paths);
        }
      }
    }
  }

  CycleCountTable table;
  table.counts.resize(static_cast<size_t>(n));

  // suffix[v*t0 + r] = number of paths from node v of the current layer back
  // to node r of layer 0 (through the remaining layers and the closing edge).
  std::vector<uint64_t> suffix;
  {
    const auto& last = g.layers[static_cast<size_t>(n - 1)];
    const size_t tl = t[static_cast<size_t>(n - 1)];
    suffix.assign(tl * t0, 0);
    for (size_t v = 0; v < tl; ++v)
      for (int e = last.edge_start[v]; e < last.edge_start[v + 1]; ++e)
        suffix[v * t0 + static_cast<size_t>(last.edge_to[static_cast<size_t>(e)])] = 1;
  }
  for (int j = n - 1; j >= 0; --j) {
    const size_t tj = t[static_cast<size_t>(j)];
    auto& counts = table.counts[static_cast<size_t>(j)];
    counts.assign(tj, 0);
    const auto& pre = prefix[static_cast<size_t>(j)];
    for (size_t v = 0; v < tj; ++v) {
      uint64_t total = 0;
      for (size_t r = 0; r < t0; ++r)
        total = sat_add(total, sat_mul(suffix[v * t0 + r], pre[r * tj + v]));
      counts[v] = total;
      if (total == kSaturated) table.overflow = true;
    }
    if (j > 0) {
      const auto& layer = g.layers[static_cast<size_t>(j - 1)];
      const size_t tp = t[static_cast<size_t>(j - 1)];
      std::vector<uint64_t> prev(tp * t0, 0);
      for (size_t v = 0; v < tp; ++v) {
        for (int e = layer.edge_start[v]; e < layer.edge_start[v + 1]; ++e) {
          const size_t w = static_cast<size_t>(layer.edge_to[static_cast<size_t>(e)]);
          for (size_t r = 0; r < t0; ++r) {
            auto& cell = prev[v * t0 + r];
            cell = sat_add(cell, suffix[w * t0 + r]);
          }
        }
      }
      suffix = std::move(prev);
    }
  }
  return table;
}

uint64_t CycleCountTable::layer_total(int layer) const {
  uint64_t total = 0;
  for (uint64_t c : counts[static_cast<size_t>(layer)]) total = sat_add(total, c);
  return total;
}

OverlapGraph prune_unique(const OverlapGraph& g, const CycleCountTable& counts) {
  const int n = g.n;
  std::vector<std::vector<char>> keep(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& layer_counts = counts.counts[static_cast<size_t>(i)];
    keep[static_cast<size_t>(i)].resize(layer_counts.size());
    for (size_t v = 0; v < layer_counts.size(); ++v)
      keep[static_cast<size_t>(i)][v] = layer_counts[v] != 1;
  }

  // Cascade: nodes that lost all successors or all predecessors cannot lie
  // on a cycle any more.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      const auto& layer = g.layers[static_cast<size_t>(i)];
      const auto& next_keep = keep[static_cast<size_t>((i + 1) % n)];
      auto& this_keep = keep[static_cast<size_t>(i)];
      std::vector<char> has_pred(next_keep.size(), 0);
      for (size_t v = 0; v < layer.kmers.size(); ++v) {
        if (!this_keep[v]) continue;
        bool has_succ = false;
        for (int e = layer.edge_start[v]; e < layer.edge_start[v + 1]; ++e) {
          const size_t w = static_cast<size_t>(layer.edge_to[static_cast<size_t>(e)]);
          if (next_keep[w]) {
            has_succ = true;
            has_pred[w] = 1;
          }
        }
        if (!has_succ) {
          this_keep[v] = 0;
          changed = true;
        }
      }
      auto& nk = keep[static_cast<size_t>((i + 1) % n)];
      for (size_t w = 0; w < nk.size(); ++w) {
        if (nk[w] && !has_pred[w]) {
          nk[w] = 0;
          changed = true;
        }
      }
    }
  }

  OverlapGraph pruned;
  pruned.n = g.n;
  pruned.k = g.k;
  pruned.alphabet = g.alphabet;
  pruned.layers.resize(static_cast<size_t>(n));
  std::vector<std::vector<int>> remap(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& layer = g.layers[static_cast<size_t>(i)];
    auto& out = pruned.layers[static_cast<size_t>(i)];
    out.window = layer.window;
    remap[static_cast<size_t>(i)].assign(layer.kmers.size(), -1);
    for (size_t v = 0; v < layer.kmers.size(); ++v) {
      if (!keep[static_cast<size_t>(i)][v]) continue;
      remap[static_cast<size_t>(i)][v] = static_cast<int>(out.kmers.size());
      out.kmers.push_back(layer.kmers[v]);
    }
  }
  for (int i = 0; i < n; ++i) {
    const auto& layer = g.layers[static_cast<size_t>(i)];
    auto& out = pruned.layers[static_cast<size_t>(i)];
    const auto& next_remap = remap[static_cast<size_t>((i + 1) % n)];
    out.edge_start.assign(out.kmers.size() + 1, 0);
    for (size_t v = 0; v < layer.kmers.size(); ++v) {
      const int nv = remap[static_cast<size_t>(i)][v];
      if (nv < 0) continue;
      for (int e = layer.edge_start[v]; e < layer.edge_start[v + 1]; ++e) {
        const int w = next_remap[static_cast<size_t>(layer.edge_to[static_cast<size_t>(e)])];
        if (w >= 0) {
          out.edge_to.push_back(w);
          ++out.edge_start[static_cast<size_t>(nv) + 1];
        }
      }
    }
    for (size_t v = 0; v < out.kmers.size(); ++v)
      out.edge_start[v + 1] += out.edge_start[v];
  }
  return pruned;
}

std::vector<std::string> enumerate_cycles(const OverlapGraph& g,
                                          const ColumnOrdering& ord) {
  const int n = g.n;
  const int k = g.k;
  check_ordering(ord, n);

  std::vector<std::string> out;
  if (g.layers.empty() || g.layers[0].kmers.empty()) return out;

  const size_t t0 = g.layers[0].kmers.size();
  std::vector<std::vector<char>> reach(static_cast<size_t>(n));
  std::vector<int> path(static_cast<size_t>(n));

  for (size_t start = 0; start < t0; ++start) {
    // reach[j][u]: u (layer j) completes the cycle back to `start`.
    for (int j = n - 1; j >= 1; --j) {
      const auto& layer = g.layers[static_cast<size_t>(j)];
      auto& r = reach[static_cast<size_t>(j)];
      r.assign(layer.kmers.size(), 0);
      for (size_t u = 0; u < layer.kmers.size(); ++u) {
        for (int e = layer.edge_start[u]; e < layer.edge_start[u + 1]; ++e) {
          const int w = layer.edge_to[static_cast<size_t>(e)];
          const bool good = (j == n - 1)
                                ? w == static_cast<int>(start)
                                : reach[static_cast<size_t>(j + 1)][static_cast<size_t>(w)] != 0;
          if (good) {
            r[u] = 1;
            break;
          }
        }
      }
    }

    path[0] = static_cast<int>(start);
    auto dfs = [&](auto&& self, int j) -> void {
      const auto& layer = g.layers[static_cast<size_t>(j)];
      const size_t u = static_cast<size_t>(path[static_cast<size_t>(j)]);
      for (int e = layer.edge_start[u]; e < layer.edge_start[u + 1]; ++e) {
        const int w = layer.edge_to[static_cast<size_t>(e)];
        if (j == n - 1) {
          if (w != static_cast<int>(start)) continue;
          // Decode the cycle: layer 0 supplies the first k chain symbols,
          // each following layer up to n-k appends one.
          std::string row(static_cast<size_t>(n), '0');
          for (int slot = 0; slot < k; ++slot) {
            const Symbol sym = kmer_symbol(g.layers[0].kmers[start], k, slot, g.alphabet);
            row[static_cast<size_t>(ord.permutation[static_cast<size_t>(slot)])] =
                static_cast<char>('0' + sym);
          }
          for (int jj = 1; jj <= n - k; ++jj) {
            const uint64_t kmer =
                g.layers[static_cast<size_t>(jj)].kmers[static_cast<size_t>(path[static_cast<size_t>(jj)])];
            const Symbol sym = kmer_symbol(kmer, k, k - 1, g.alphabet);
            row[static_cast<size_t>(ord.permutation[static_cast<size_t>(jj + k - 1)])] =
                static_cast<char>('0' + sym);
          }
          out.push_back(std::move(row));
          continue;
        }
        if (!reach[static_cast<size_t>(j + 1)][static_cast<size_t>(w)]) continue;
        path[static_cast<size_t>(j + 1)] = w;
        self(self, j + 1);
      }
    };
    dfs(dfs, 0);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Packed variant of enumerate_cycles for binary sets: rows come back as
// machine words (column 0 at the most significant of the n bits), sorted.
static std::vector<uint64_t> enumerate_cycles_packed(const OverlapGraph& g,
                                                     const ColumnOrdering& ord) {
  const int n = g.n;
  const int k = g.k;
  std::vector<uint64_t> out;
  if (g.layers.empty() || g.layers[0].kmers.empty()) return out;

  // Bit of the output word that chain position t controls.
  std::vector<int> shift(static_cast<size_t>(n));
  for (int t = 0; t < n; ++t)
    shift[static_cast<size_t>(t)] = n - 1 - ord.permutation[static_cast<size_t>(t)];

  const size_t t0 = g.layers[0].kmers.size();
  std::vector<std::vector<char>> reach(static_cast<size_t>(n));
  std::vector<int> path(static_cast<size_t>(n));

  for (size_t start = 0; start < t0; ++start) {
    for (int j = n - 1; j >= 1; --j) {
      const auto& layer = g.layers[static_cast<size_t>(j)];
      auto& r = reach[static_cast<size_t>(j)];
      r.assign(layer.kmers.size(), 0);
      for (size_t u = 0; u < layer.kmers.size(); ++u) {
        for (int e = layer.edge_start[u]; e < layer.edge_start[u + 1]; ++e) {
          const int w = layer.edge_to[static_cast<size_t>(e)];
          const bool good = (j == n - 1)
                                ? w == static_cast<int>(start)
                                : reach[static_cast<size_t>(j + 1)][static_cast<size_t>(w)] != 0;
          if (good) {
            r[u] = 1;
            break;
          }
        }
      }
    }

    uint64_t prefix = 0;
    const uint64_t kmer0 = g.layers[0].kmers[start];
    for (int slot = 0; slot < k; ++slot)
      prefix |= static_cast<uint64_t>((kmer0 >> (k - 1 - slot)) & 1)
                << shift[static_cast<size_t>(slot)];

    path[0] = static_cast<int>(start);
    auto dfs = [&](auto&& self, int j, uint64_t word) -> void {
      const auto& layer = g.layers[static_cast<size_t>(j)];
      const size_t u = static_cast<size_t>(path[static_cast<size_t>(j)]);
      for (int e = layer.edge_start[u]; e < layer.edge_start[u + 1]; ++e) {
        const int w = layer.edge_to[static_cast<size_t>(e)];
        if (j == n - 1) {
          if (w == static_cast<int>(start)) out.push_back(word);
          continue;
        }
        if (!reach[static_cast<size_t>(j + 1)][static_cast<size_t>(w)]) continue;
        uint64_t extended = word;
        if (j + 1 <= n - k) {
          const uint64_t kmer =
              g.layers[static_cast<size_t>(j + 1)].kmers[static_cast<size_t>(w)];
          extended |= (kmer & 1) << shift[static_cast<size_t>(j + k)];
        }
        path[static_cast<size_t>(j + 1)] = w;
        self(self, j + 1, extended);
      }
    };
    dfs(dfs, 0, prefix);
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Bounded exclusion test on packed disagreement masks (universe labels are
// bit positions; hitting-set feasibility is invariant under relabeling).
// One greedy pass over the first-unhit sets yields both bounds: the picked
// sets are pairwise disjoint, so their count bounds the optimum from below
// and the size of their union is an attained hitting set.
bool fpt_masks(const std::vector<uint64_t>& sets, int k, uint64_t chosen, int used) {
  const uint64_t* branch = nullptr;
  int branch_popcount = 65;
  for (const uint64_t& set : sets) {
    if ((set & chosen) != 0) continue;
    const int pc = __builtin_popcountll(set);
    if (pc < branch_popcount) {
      branch_popcount = pc;
      branch = &set;
      if (pc == 1) break;
    }
  }
  if (branch == nullptr) return true;
  if (used >= k) return false;
  uint64_t bits = *branch;
  while (bits != 0) {
    const int e = __builtin_ctzll(bits);
    bits &= bits - 1;
    if (fpt_masks(sets, k, chosen | (1ull << e), used + 1)) return true;
  }
  return false;
}

bool excluded_at_packed(const std::vector<uint64_t>& masks, int k) {
  uint64_t chosen = 0;
  int picked = 0;
  for (uint64_t set : masks) {
    if ((set & chosen) != 0) continue;
    chosen |= set;
    ++picked;
  }
  if (picked > k) return false;  // more disjoint sets than budget
  if (__builtin_popcountll(chosen) <= k) return true;  // attained hitting set
  return fpt_masks(masks, k, 0, 0);
}

ReconReport identity_report(const StringSet& s, int k) {
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(static_cast<size_t>(s.size()));
  for (int i = 0; i < s.size(); ++i)
    rows.emplace_back(s.row(i).begin(), s.row(i).end());
  std::sort(rows.begin(), rows.end());
  ReconReport report;
  report.k = k;
  report.members = StringSet::from_symbols(s.length(), s.alphabet(), std::move(rows));
  report.extras = 0;
  return report;
}

std::vector<Symbol> unpack_row(uint64_t word, int n) {
  std::vector<Symbol> row(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    row[static_cast<size_t>(j)] = static_cast<Symbol>((word >> (n - 1 - j)) & 1);
  return row;
}

ReconReport recon_overlap_impl(const StringSet& s, int k, const OverlapOptions& opts,
                               bool parallel) {
  const int n = s.length();
  if (k < 2 || k > n)
    throw InputError("overlap reconstruction needs 2 <= k <= n");
  if (k == n) return identity_report(s, k);

  const ColumnOrdering ord =
      opts.ordering.has_value() ? *opts.ordering : order_columns(s);
  const OverlapGraph graph = build_graph(s, k, ord);
  const CycleCountTable counts = cycle_counts(graph);
  const OverlapGraph pruned = prune_unique(graph, counts);

  // Candidates not in S are in Recon_k iff no k-window excludes them; at
  // k = n-1 the n cyclic windows are already all windows, so every cycle is
  // a member and no hitting set calls are needed.
  std::vector<std::vector<Symbol>> rows;
  int extras = 0;

  if (s.binary_packed()) {
    const std::vector<uint64_t> candidates = enumerate_cycles_packed(pruned, ord);
    const std::vector<uint64_t> keys = s.sorted_keys();
    std::vector<char> kept(candidates.size(), 0);
    const int64_t count = static_cast<int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic, 64) if (parallel)
    for (int64_t i = 0; i < count; ++i) {
      const uint64_t cand = candidates[static_cast<size_t>(i)];
      if (std::binary_search(keys.begin(), keys.end(), cand)) continue;
      if (k == n - 1) {
        kept[static_cast<size_t>(i)] = 1;
        continue;
      }
      std::vector<uint64_t> masks(static_cast<size_t>(s.size()));
      for (int r = 0; r < s.size(); ++r)
        masks[static_cast<size_t>(r)] = s.packed_row(r) ^ cand;
      if (!excluded_at_packed(masks, k)) kept[static_cast<size_t>(i)] = 1;
    }
    rows.reserve(static_cast<size_t>(s.size()) + candidates.size());
    for (int i = 0; i < s.size(); ++i)
      rows.emplace_back(s.row(i).begin(), s.row(i).end());
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (!kept[i]) continue;
      ++extras;
      rows.push_back(unpack_row(candidates[i], n));
    }
  } else {
    const std::vector<std::string> candidates = enumerate_cycles(pruned, ord);
    std::vector<char> kept(candidates.size(), 0);
    const int64_t count = static_cast<int64_t>(candidates.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int64_t i = 0; i < count; ++i) {
      const std::string& cand = candidates[static_cast<size_t>(i)];
      if (s.contains_digits(cand)) continue;
      if (k == n - 1) {
        kept[static_cast<size_t>(i)] = 1;
      } else {
        const auto symbols = digits_to_symbols(cand, s.alphabet());
        if (!excluded_at(s, symbols, k)) kept[static_cast<size_t>(i)] = 1;
      }
    }
    rows.reserve(static_cast<size_t>(s.size()) + candidates.size());
    for (int i = 0; i < s.size(); ++i)
      rows.emplace_back(s.row(i).begin(), s.row(i).end());
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (!kept[i]) continue;
      ++extras;
      rows.push_back(digits_to_symbols(candidates[i], s.alphabet()));
    }
  }
  std::sort(rows.begin(), rows.end());

  ReconReport report;
  report.k = k;
  report.members = StringSet::from_symbols(n, s.alphabet(), std::move(rows));
  report.extras = extras;
  return report;
}

}  // namespace

ReconReport recon_overlap(const StringSet& s, int k, const OverlapOptions& opts) {
  return recon_overlap_impl(s, k, opts, opts.parallel);
}

ReconReport recon_overlap_serial(const StringSet& s, int k, OverlapOptions opts) {
  opts.parallel = false;
  return recon_overlap_impl(s, k, opts, false);
}

bool decide_perfect_at_k(const StringSet& s, int k, const OverlapOptions& opts) {
  const int n = s.length();
  if (k < 2 || k > n)
    throw InputError("overlap reconstruction needs 2 <= k <= n");
  if (k == n) return true;

  const ColumnOrdering ord =
      opts.ordering.has_value() ? *opts.ordering : order_columns(s);
  const OverlapGraph graph = build_graph(s, k, ord);
  const CycleCountTable counts = cycle_counts(graph);
  const OverlapGraph pruned = prune_unique(graph, counts);

  if (s.binary_packed()) {
    const std::vector<uint64_t> candidates = enumerate_cycles_packed(pruned, ord);
    const std::vector<uint64_t> keys = s.sorted_keys();
    std::vector<uint64_t> masks(static_cast<size_t>(s.size()));
    for (const uint64_t cand : candidates) {
      if (std::binary_search(keys.begin(), keys.end(), cand)) continue;
      if (k == n - 1) return false;
      for (int r = 0; r < s.size(); ++r)
        masks[static_cast<size_t>(r)] = s.packed_row(r) ^ cand;
      if (!excluded_at_packed(masks, k)) return false;  // verified extra string
    }
    return true;
  }

  const std::vector<std::string> candidates = enumerate_cycles(pruned, ord);
  for (const std::string& cand : candidates) {
    if (s.contains_digits(cand)) continue;
    if (k == n - 1) return false;
    const auto symbols = digits_to_symbols(cand, s.alphabet());
    if (!excluded_at(s, symbols, k)) return false;  // verified extra string
  }
  return true;
}

void dump_graph(std::ostream& out, const OverlapGraph& g) {
  out << "overlap-graph n=" << g.n << " k=" << g.k << " alphabet=" << g.alphabet
      << " nodes=" << g.node_count() << " edges=" << g.edge_count() << '\n';
  for (int i = 0; i < g.n; ++i) {
    const auto& layer = g.layers[static_cast<size_t>(i)];
    out << "layer " << i << " window=";
    for (size_t t = 0; t < layer.window.size(); ++t) {
      if (t) out << ',';
      out << layer.window[t];
    }
    out << '\n';
    for (size_t v = 0; v < layer.kmers.size(); ++v) {
      out << "layer " << i << " node " << v << " kmer "
          << g.kmer_digits(i, static_cast<int>(v)) << " ->";
      for (int e = layer.edge_start[v]; e < layer.edge_start[v + 1]; ++e)
        out << ' ' << layer.edge_to[static_cast<size_t>(e)];
      out << '\n';
    }
  }
}

void dump_matrix(std::ostream& out, const OverlapGraph& g) {
  const CycleCountTable counts = cycle_counts(g);
  for (int i = 0; i < g.n; ++i) {
    const auto& layer = g.layers[static_cast<size_t>(i)];
    const auto& next = g.layers[static_cast<size_t>((i + 1) % g.n)];
    out << "block " << i << " (layer " << i << " -> layer " << (i + 1) % g.n
        << "), " << layer.kmers.size() << " x " << next.kmers.size() << '\n';
    for (size_t v = 0; v < layer.kmers.size(); ++v) {
      std::vector<char> row(next.kmers.size(), '0');
      for (int e = layer.edge_start[v]; e < layer.edge_start[v + 1]; ++e)
        row[static_cast<size_t>(layer.edge_to[static_cast<size_t>(e)])] = '1';
      for (size_t w = 0; w < row.size(); ++w) {
        if (w) out << ' ';
        out << row[w];
      }
      out << '\n';
    }
  }
  for (int i = 0; i < g.n; ++i) {
    out << "cycles layer " << i << ":";
    for (uint64_t c : counts.counts[static_cast<size_t>(i)]) out << ' ' << c;
    out << '\n';
  }
}

}  // namespace kproj
