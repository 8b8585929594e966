#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kproj/core.hpp"
#include "kproj/ordering.hpp"
#include "kproj/string_set.hpp"

namespace kproj {

// Layered overlap graph over the n cyclically contiguous k-windows of a
// column ordering. Layer i holds the distinct k-mers of the input set at
// chain positions i..i+k-1 (mod n), sorted; edges join nodes of adjacent
// layers whose k-mers overlap in k-1 symbols. Every length-n cycle picks
// exactly one node per layer and spells a string consistent with all n
// cyclic windows.
struct OverlapGraph {
  struct Layer {
    std::vector<int> window;       // original column per chain slot
    std::vector<uint64_t> kmers;   // packed base-a values, sorted
    std::vector<int> edge_start;   // CSR offsets, size kmers.size()+1
    std::vector<int> edge_to;      // successor ids in the next layer
  };

  int n = 0;
  int k = 0;
  int alphabet = 2;
  std::vector<Layer> layers;

  size_t node_count() const;
  size_t edge_count() const;
  int out_degree(int layer, int node) const {
    return layers[static_cast<size_t>(layer)].edge_start[static_cast<size_t>(node) + 1] -
           layers[static_cast<size_t>(layer)].edge_start[static_cast<size_t>(node)];
  }
  std::string kmer_digits(int layer, int node) const;
};

// Number of length-n cycles through every node, from the diagonal of the
// n-th power of the adjacency matrix computed block by block around the
// cycle of layers. Counters saturate at UINT64_MAX; `overflow` reports
// whether any did. A saturated count can never equal 1, so pruning stays
// sound without consulting the flag.
struct CycleCountTable {
  std::vector<std::vector<uint64_t>> counts;
  bool overflow = false;

  uint64_t layer_total(int layer) const;
};

OverlapGraph build_graph(const StringSet& s, int k, const ColumnOrdering& ord);

CycleCountTable cycle_counts(const OverlapGraph& g);

// Removes every node lying on exactly one cycle (that cycle is necessarily
// an input string), then cascades away nodes left without predecessors or
// successors. Counts are not recomputed for another removal round: a node
// whose count drops to 1 afterwards may owe its remaining cycle to a
// non-input string, which must not be dropped.
OverlapGraph prune_unique(const OverlapGraph& g, const CycleCountTable& counts);

// All length-n cycles decoded back to strings in original column order;
// sorted digit strings. May be empty after pruning.
std::vector<std::string> enumerate_cycles(const OverlapGraph& g,
                                          const ColumnOrdering& ord);

struct OverlapOptions {
  // Column ordering to use; defaults to order_columns(s).
  std::optional<ColumnOrdering> ordering;
  bool parallel = true;
};

// Full pipeline: order columns, build the graph, count cycles, prune,
// enumerate, then keep each candidate outside the input set iff no size-k
// hitting set excludes it. k = n needs no graph, and k = n-1 needs no
// hitting set calls because the cyclic windows are then all windows.
ReconReport recon_overlap(const StringSet& s, int k, const OverlapOptions& opts = {});
ReconReport recon_overlap_serial(const StringSet& s, int k, OverlapOptions opts = {});

// True iff the k-reconstruction adds nothing; stops at the first verified
// extra string.
bool decide_perfect_at_k(const StringSet& s, int k, const OverlapOptions& opts = {});

// Textual adjacency listing ("layer node kmer -> successors") and the
// per-layer adjacency blocks with the diagonal of A^n.
void dump_graph(std::ostream& out, const OverlapGraph& g);
void dump_matrix(std::ostream& out, const OverlapGraph& g);

}  // namespace kproj
