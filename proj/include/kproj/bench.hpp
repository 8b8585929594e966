#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kproj/engines.hpp"

namespace kproj {

// One benchmark run over the cross product of the parameter lists. Every
// trial derives its own seed from the master seed and the cell parameters,
// so trials are reproducible independently of execution order, and all
// engines of a trial share one dataset.
struct ExperimentConfig {
  std::vector<int> n_values;
  std::vector<int> m_values;
  std::vector<int> k_values;  // empty means all k in [1, n]; k > n cells skip
  std::optional<int> trials;  // default 30, or 10 once m >= 500
  uint64_t seed = 0;
  std::vector<Engine> engines = {Engine::kOverlap, Engine::kGreedy};
  EnumGuard guard;
  // Thread use inside the timed engine runs; off by default so wall times
  // are single-core and comparable.
  bool parallel_engines = false;
};

struct BenchRecord {
  int n = 0;
  int m = 0;
  int k = 0;
  int trial = 0;
  uint64_t seed = 0;
  Engine engine = Engine::kOverlap;
  bool error = false;  // engine guard tripped; numeric fields are blank
  double runtime_ms = 0.0;
  int extra_strings = 0;
  std::optional<uint64_t> greedy_checks;
  double normalized_runtime = 0.0;  // runtime_ms / C(n, k-1)
  bool noinfo_flag = false;         // m >= k * 2^k heuristic
};

// m distinct uniform binary strings, in generation order. Deterministic in
// the seed (xoshiro256** seeded via splitmix64); duplicate draws are
// rejected and redrawn.
StringSet gen_random_set(int n, int m, uint64_t seed);

// Per-trial seed: the master seed folded with n, m, k and the trial index
// through splitmix64.
uint64_t trial_seed(uint64_t master, int n, int m, int k, int trial);

// Runs every cell and trial; records come back sorted by
// (n, m, k, trial, engine name). Engine guard violations become error
// records rather than aborting the run.
std::vector<BenchRecord> run_experiment(const ExperimentConfig& cfg);

extern const char* const kCsvHeader;
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
std::string record_csv_line(const BenchRecord& record);

}  // namespace kproj
