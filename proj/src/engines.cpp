#include "kproj/engines.hpp"

namespace kproj {

Engine engine_from_name(std::string_view name) {
  if (name == "brute") return Engine::kBrute;
  if (name == "overlap") return Engine::kOverlap;
  if (name == "greedy") return Engine::kGreedy;
  throw InputError("unknown engine '" + std::string(name) +
                   "' (expected brute, overlap, or greedy)");
}

std::string_view engine_name(Engine engine) {
  switch (engine) {
    case Engine::kBrute: return "brute";
    case Engine::kOverlap: return "overlap";
    case Engine::kGreedy: return "greedy";
  }
  return "?";
}

ReconReport recon(const StringSet& s, int k, Engine engine,
                  const EngineOptions& opts) {
  switch (engine) {
    case Engine::kBrute:
      return recon_brute(s, k, opts.guard, opts.parallel);
    case Engine::kOverlap:
      if (k == 1) return recon_product(s, opts.guard);
      return recon_overlap(s, k, OverlapOptions{opts.ordering, opts.parallel});
    case Engine::kGreedy:
      return recon_greedy(s, k, GreedyOptions{opts.ordering, opts.parallel}).report;
  }
  throw InputError("invalid engine");
}

bool decide_at_k(const StringSet& s, int k, Engine engine,
                 const EngineOptions& opts) {
  if (k == 1) return is_1_reconstructible(s);
  switch (engine) {
    case Engine::kBrute:
      return recon_brute(s, k, opts.guard, opts.parallel).extras == 0;
    case Engine::kOverlap:
      return decide_perfect_at_k(s, k, OverlapOptions{opts.ordering, opts.parallel});
    case Engine::kGreedy:
      return recon_greedy(s, k, GreedyOptions{opts.ordering, opts.parallel})
                 .report.extras == 0;
  }
  throw InputError("invalid engine");
}

namespace {

bool perfect_at(const StringSet& s, int k, Engine engine, const EngineOptions& opts) {
  if (k == 1) return is_1_reconstructible(s);
  if (k == 2 && s.alphabet() == 2) return is_2_reconstructible(s);
  return decide_at_k(s, k, engine, opts);
}

}  // namespace

int perfect_point(const StringSet& s, Engine engine, SearchMode mode,
                  const EngineOptions& opts) {
  const int n = s.length();
  if (mode == SearchMode::kAscend) {
    for (int k = 1; k < n; ++k)
      if (perfect_at(s, k, engine, opts)) return k;
    return n;  // Recon_n(S) = S always
  }
  // Perfection is monotone in k, so binary search for the least true k;
  // k = n is known true and never evaluated.
  int lo = 1, hi = n;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (perfect_at(s, mid, engine, opts))
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

}  // namespace kproj
