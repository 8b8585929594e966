#pragma once

#include <vector>

#include "kproj/string_set.hpp"

namespace kproj {

// A column ordering for the overlap graph. permutation[p] is the original
// column placed at chain position p. similarity is the n x n matrix the
// greedy chain was built from (empty for identity orderings): for binary
// sets the absolute dot product of the +-1 rewriting of two columns, for
// larger alphabets the number of agreeing rows. Both lie in [0, m] with
// diagonal m.
struct ColumnOrdering {
  std::vector<int> permutation;
  std::vector<std::vector<int>> similarity;

  static ColumnOrdering identity(int n);
  int size() const { return static_cast<int>(permutation.size()); }
};

// Greedy chain: seed with the highest-similarity pair, then repeatedly
// append the unused column most similar to the chain end. Ties always
// resolve to the lowest column index, so the result is deterministic.
ColumnOrdering order_columns(const StringSet& s);

}  // namespace kproj
