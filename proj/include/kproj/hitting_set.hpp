#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kproj/core.hpp"
#include "kproj/string_set.hpp"

namespace kproj {

// Hitting Set over a universe of at most 64 elements. Sets are stored as
// bitmasks so hit tests are single word operations. An empty member set
// marks the instance as trivially unhittable; this is a flag rather than an
// error because the non-containment reduction produces empty sets whenever
// x is already in the string set.
class HittingSetInstance {
 public:
  HittingSetInstance(int universe_size, std::vector<uint64_t> sets,
                     std::optional<int> budget = std::nullopt);

  // Text format: first line "n m", then one line per set listing its
  // elements space-separated (a blank line is the empty set).
  static HittingSetInstance parse(std::istream& in);

  int universe() const { return universe_; }
  const std::vector<uint64_t>& sets() const { return sets_; }
  std::optional<int> budget() const { return budget_; }
  bool unhittable() const { return unhittable_; }

  // Largest set cardinality d; 0 for an empty family.
  int max_set_size() const;

 private:
  int universe_;
  std::vector<uint64_t> sets_;
  std::optional<int> budget_;
  bool unhittable_ = false;
};

struct HittingSetSolution {
  std::vector<int> hitters;  // sorted ascending
  bool optimal = false;
  bool unhittable = false;
};

struct ApproxResult {
  HittingSetSolution solution;
  std::vector<int> picked_sets;  // indices of the (pairwise disjoint) sets taken
};

// One set per input string: the indices where x disagrees with that string.
// A hitting set of size <= k exists iff x is not in the k-reconstruction.
HittingSetInstance from_noncontainment(const StringSet& s, std::span<const Symbol> x);
HittingSetInstance from_noncontainment_digits(const StringSet& s, std::string_view x);

// Inverse direction: strings are the indicator vectors of the sets and x is
// the all-zeros string. Instances with empty sets are rejected.
std::pair<StringSet, std::string> to_noncontainment(const HittingSetInstance& h);

// Minimum-cardinality hitting set by branch and bound over unhit sets,
// branching on the smallest unhit set first. Returns the lexicographically
// least optimal set so results are canonical.
HittingSetSolution solve_exact(const HittingSetInstance& h);

// Depth-<=k bounded search tree over the <= d elements of the first unhit
// set; worst case d^k nodes. nullopt when no hitting set of size <= k exists.
std::optional<HittingSetSolution> solve_fpt(const HittingSetInstance& h, int k);

// d-approximation: repeatedly take every element of the first unhit set.
// The picked sets are pairwise disjoint, so the output is at most d times
// the optimum.
ApproxResult approx_d(const HittingSetInstance& h);

// Minimum k with x outside the k-reconstruction; nullopt ("never") when
// x is in s. Satisfies: x in Recon_k(s) iff k < result.
std::optional<int> min_exclusion_k(const StringSet& s, std::span<const Symbol> x);
std::optional<int> min_exclusion_k_digits(const StringSet& s, std::string_view x);

// Decision form used by the overlap pipeline: is x excluded at window size
// k, i.e. does a hitting set of size <= k exist for the disagreement sets?
bool excluded_at(const StringSet& s, std::span<const Symbol> x, int k);

// Padding isomorphism: characters of x are doubled and y is appended in a
// self-delimiting pair encoding. Membership is preserved at the same k: a
// disagreeing window of the padded instance maps to one at most as large in
// the original (halve the doubled indices, drop the pad, pad the window back
// up), and conversely single copies of a disagreeing window transfer
// directly. Doubling the budget instead would break the equivalence: a
// window taking one copy each of 2k distinct doubled columns reaches
// disagreements that only windows of size up to 2k see in the original.
struct PaddedInstance {
  StringSet set;
  std::string x;  // digits
  int k = 0;
};

PaddedInstance pad_instance(const StringSet& s, std::string_view x, int k,
                            std::string_view y);

// Recovers y exactly: the longest suffix of (c, c+1 mod a) pairs.
std::string unpad(const PaddedInstance& padded);

// Brute force over all toggles X not among the sets: true iff every toggled
// family has a hitting set of size <= k. Equivalent to deciding whether the
// indicator string set is perfectly reconstructed at k.
bool toggled_decision(const HittingSetInstance& h, int k, const EnumGuard& guard = {});

}  // namespace kproj
