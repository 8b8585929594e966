#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kproj/core.hpp"
#include "kproj/ordering.hpp"

namespace kproj {

// Instrumentation of a greedy run: every (candidate, window) compatibility
// test performed is counted (tests skipped by the short-circuit after a
// failed window are not), and the partial-string count is recorded at the
// seed stage and after each extension.
struct GreedyTrace {
  uint64_t checks = 0;
  std::vector<uint64_t> frontier_sizes;
};

struct GreedyResult {
  ReconReport report;
  GreedyTrace trace;
};

struct GreedyOptions {
  // Column ordering shared with the overlap engine; identity by default.
  std::optional<ColumnOrdering> ordering;
  bool parallel = true;
};

// Baseline reconstruction by extending partial strings one index at a time.
// Stage k seeds with the first window's projections; the stage adding index
// i keeps an extension iff every window made of index i plus k-1 earlier
// indices matches some input string. The final frontier is exactly the
// k-reconstruction.
GreedyResult recon_greedy(const StringSet& s, int k, const GreedyOptions& opts = {});
GreedyResult recon_greedy_serial(const StringSet& s, int k, GreedyOptions opts = {});

}  // namespace kproj
