#pragma once

#include <optional>
#include <string_view>

#include "kproj/core.hpp"
#include "kproj/greedy.hpp"
#include "kproj/overlap.hpp"

namespace kproj {

enum class Engine { kBrute, kOverlap, kGreedy };

Engine engine_from_name(std::string_view name);
std::string_view engine_name(Engine engine);

struct EngineOptions {
  EnumGuard guard;
  bool parallel = true;
  // Forwarded to the overlap and greedy engines when set.
  std::optional<ColumnOrdering> ordering;
};

// k-reconstruction through the chosen engine. The overlap engine routes
// k=1 to the per-column product fast path (its graph needs k >= 2); the
// engine choice never changes the members, only the runtime.
ReconReport recon(const StringSet& s, int k, Engine engine,
                  const EngineOptions& opts = {});

// Engine decision for Recon_k(S) == S; k=1 always uses the product test.
bool decide_at_k(const StringSet& s, int k, Engine engine,
                 const EngineOptions& opts = {});

enum class SearchMode { kAscend, kBinary };

// Least k with Recon_k(S) = S. Ascends from k=1 by default (binary search
// on request; the predicate is monotone in k). k=1 uses the product test
// and k=2 the pairwise-constraint test on binary alphabets; everything else
// goes to the engine.
int perfect_point(const StringSet& s, Engine engine,
                  SearchMode mode = SearchMode::kAscend,
                  const EngineOptions& opts = {});

}  // namespace kproj
