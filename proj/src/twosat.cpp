#include "kproj/twosat.hpp"

#include <algorithm>

namespace kproj {

TwoSat::TwoSat(int num_vars) : n_(num_vars) {}

void TwoSat::add_clause(int var_a, bool value_a, int var_b, bool value_b) {
  clauses_.emplace_back(lit(var_a, value_a), lit(var_b, value_b));
  graph_built_ = false;
}

void TwoSat::build_graph() const {
  const int nodes = 2 * n_;
  std::vector<int> degree(static_cast<size_t>(nodes), 0);
  for (auto [a, b] : clauses_) {
    ++degree[static_cast<size_t>(a ^ 1)];
    ++degree[static_cast<size_t>(b ^ 1)];
  }
  adj_start_.assign(static_cast<size_t>(nodes) + 1, 0);
  for (int u = 0; u < nodes; ++u)
    adj_start_[static_cast<size_t>(u) + 1] =
        adj_start_[static_cast<size_t>(u)] + degree[static_cast<size_t>(u)];
  adj_to_.assign(static_cast<size_t>(adj_start_.back()), 0);
  std::vector<int> fill(adj_start_.begin(), adj_start_.end() - 1);
  for (auto [a, b] : clauses_) {
    adj_to_[static_cast<size_t>(fill[static_cast<size_t>(a ^ 1)]++)] = b;
    adj_to_[static_cast<size_t>(fill[static_cast<size_t>(b ^ 1)]++)] = a;
  }
  graph_built_ = true;
}

bool TwoSat::satisfiable_with(const std::vector<int8_t>& assignment) const {
  if (!graph_built_) build_graph();
  const int nodes = 2 * n_;

  // Unit edges from the partial assignment: fixing x_v = b adds the
  // implication (v != b) -> (v == b).
  std::vector<int> unit_to(static_cast<size_t>(nodes), -1);
  for (int v = 0; v < n_; ++v) {
    int8_t b = assignment.empty() ? int8_t{-1} : assignment[static_cast<size_t>(v)];
    if (b < 0) continue;
    unit_to[static_cast<size_t>(lit(v, !b))] = lit(v, b != 0);
  }

  // Iterative Tarjan SCC.
  std::vector<int> index(static_cast<size_t>(nodes), -1);
  std::vector<int> low(static_cast<size_t>(nodes), 0);
  std::vector<int> comp(static_cast<size_t>(nodes), -1);
  std::vector<int> stack;
  std::vector<char> on_stack(static_cast<size_t>(nodes), 0);
  int next_index = 0;
  int next_comp = 0;

  struct Frame {
    int node;
    int edge;  // -1 = unit edge pending, >= 0 = CSR offset
  };
  std::vector<Frame> frames;

  auto neighbor_count = [&](int u) {
    return adj_start_[static_cast<size_t>(u) + 1] - adj_start_[static_cast<size_t>(u)];
  };
  auto neighbor_at = [&](int u, int e) {
    return adj_to_[static_cast<size_t>(adj_start_[static_cast<size_t>(u)] + e)];
  };

  for (int root = 0; root < nodes; ++root) {
    if (index[static_cast<size_t>(root)] != -1) continue;
    frames.push_back({root, -1});
    index[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<size_t>(root)] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      int u = f.node;
      int next = -1;
      if (f.edge == -1) {
        f.edge = 0;
        if (unit_to[static_cast<size_t>(u)] >= 0) next = unit_to[static_cast<size_t>(u)];
      }
      if (next == -1 && f.edge < neighbor_count(u)) next = neighbor_at(u, f.edge++);
      if (next != -1) {
        int v = next;
        if (index[static_cast<size_t>(v)] == -1) {
          index[static_cast<size_t>(v)] = low[static_cast<size_t>(v)] = next_index++;
          stack.push_back(v);
          on_stack[static_cast<size_t>(v)] = 1;
          frames.push_back({v, -1});
        } else if (on_stack[static_cast<size_t>(v)]) {
          low[static_cast<size_t>(u)] =
              std::min(low[static_cast<size_t>(u)], index[static_cast<size_t>(v)]);
        }
        continue;
      }
      // u exhausted
      if (low[static_cast<size_t>(u)] == index[static_cast<size_t>(u)]) {
        for (;;) {
          int w = stack.back();
          stack.pop_back();
          on_stack[static_cast<size_t>(w)] = 0;
          comp[static_cast<size_t>(w)] = next_comp;
          if (w == u) break;
        }
        ++next_comp;
      }
      frames.pop_back();
      if (!frames.empty()) {
        int parent = frames.back().node;
        low[static_cast<size_t>(parent)] =
            std::min(low[static_cast<size_t>(parent)], low[static_cast<size_t>(u)]);
      }
    }
  }

  for (int v = 0; v < n_; ++v) {
    if (comp[static_cast<size_t>(lit(v, false))] == comp[static_cast<size_t>(lit(v, true))])
      return false;
  }
  return true;
}

bool TwoSat::satisfiable() const { return satisfiable_with({}); }

uint64_t TwoSat::enumerate(
    uint64_t limit,
    const std::function<bool(const std::vector<int8_t>&)>& on_solution) const {
  if (limit == 0) return 0;
  std::vector<int8_t> assignment(static_cast<size_t>(n_), -1);
  uint64_t found = 0;
  bool stop = false;

  // Branch on variables in index order, value 0 first; prune branches whose
  // implication graph is already unsatisfiable.
  auto rec = [&](auto&& self, int var) -> void {
    if (stop) return;
    if (!satisfiable_with(assignment)) return;
    if (var == n_) {
      ++found;
      if (on_solution && !on_solution(assignment)) stop = true;
      if (found >= limit) stop = true;
      return;
    }
    for (int8_t value : {int8_t{0}, int8_t{1}}) {
      assignment[static_cast<size_t>(var)] = value;
      self(self, var + 1);
      if (stop) break;
    }
    assignment[static_cast<size_t>(var)] = -1;
  };
  rec(rec, 0);
  return found;
}

}  // namespace kproj
