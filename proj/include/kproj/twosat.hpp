#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace kproj {

// 2-SAT instance with solution enumeration. Satisfiability under a partial
// assignment is decided by a strongly-connected-components test on the
// implication graph (the partial assignment contributes unit clauses).
// Enumeration branches on variables in index order, value 0 before 1, and
// re-checks satisfiability before each descent, so solutions come out in
// lexicographic order with polynomial delay.
class TwoSat {
 public:
  explicit TwoSat(int num_vars);

  // Adds the clause (x_a == value_a) OR (x_b == value_b).
  void add_clause(int var_a, bool value_a, int var_b, bool value_b);

  int num_vars() const { return n_; }
  size_t num_clauses() const { return clauses_.size(); }

  bool satisfiable() const;

  // assignment[v] in {-1, 0, 1}; -1 means unassigned.
  bool satisfiable_with(const std::vector<int8_t>& assignment) const;

  // Enumerates satisfying assignments up to `limit`; the optional callback
  // may return false to stop. Returns the number of solutions found.
  uint64_t enumerate(
      uint64_t limit,
      const std::function<bool(const std::vector<int8_t>&)>& on_solution = {}) const;

 private:
  static int lit(int var, bool value) { return 2 * var + (value ? 1 : 0); }

  int n_;
  std::vector<std::pair<int, int>> clauses_;  // pairs of literals

  // Implication edges, rebuilt lazily into CSR form.
  void build_graph() const;
  mutable bool graph_built_ = false;
  mutable std::vector<int> adj_start_;
  mutable std::vector<int> adj_to_;
};

}  // namespace kproj
