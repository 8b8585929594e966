#include "kproj/ordering.hpp"

#include <algorithm>
#include <cstdlib>

namespace kproj {

ColumnOrdering ColumnOrdering::identity(int n) {
  ColumnOrdering ord;
  ord.permutation.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ord.permutation[static_cast<size_t>(i)] = i;
  return ord;
}

ColumnOrdering order_columns(const StringSet& s) {
  const int n = s.length();
  const int m = s.size();

  ColumnOrdering ord;
  ord.similarity.assign(static_cast<size_t>(n),
                        std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) ord.similarity[static_cast<size_t>(i)][static_cast<size_t>(i)] = m;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      int agree = 0;
      for (int r = 0; r < m; ++r) agree += s.symbol(r, i) == s.symbol(r, j);
      // In the +-1 basis the dot product is agree - disagree = 2*agree - m;
      // complementary binary columns are as good as identical ones, hence
      // the absolute value. Larger alphabets have no complement pairing, so
      // plain agreement is used there.
      const int value = s.alphabet() == 2 ? std::abs(2 * agree - m) : agree;
      ord.similarity[static_cast<size_t>(i)][static_cast<size_t>(j)] = value;
      ord.similarity[static_cast<size_t>(j)][static_cast<size_t>(i)] = value;
    }
  }

  if (n == 1) {
    ord.permutation = {0};
    return ord;
  }

  // Seed with the best pair (lowest indices on ties).
  int best_i = 0, best_j = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ord.similarity[static_cast<size_t>(i)][static_cast<size_t>(j)] >
          ord.similarity[static_cast<size_t>(best_i)][static_cast<size_t>(best_j)]) {
        best_i = i;
        best_j = j;
      }

  std::vector<char> used(static_cast<size_t>(n), 0);
  ord.permutation = {best_i, best_j};
  used[static_cast<size_t>(best_i)] = used[static_cast<size_t>(best_j)] = 1;
  while (static_cast<int>(ord.permutation.size()) < n) {
    const int tail = ord.permutation.back();
    int best = -1;
    for (int c = 0; c < n; ++c) {
      if (used[static_cast<size_t>(c)]) continue;
      if (best == -1 ||
          ord.similarity[static_cast<size_t>(tail)][static_cast<size_t>(c)] >
              ord.similarity[static_cast<size_t>(tail)][static_cast<size_t>(best)])
        best = c;
    }
    ord.permutation.push_back(best);
    used[static_cast<size_t>(best)] = 1;
  }
  return ord;
}

}  // namespace kproj
