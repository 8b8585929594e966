#include "kproj/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <unordered_set>

#include "kproj/bits.hpp"
#include "kproj/rng.hpp"

namespace kproj {

StringSet gen_random_set(int n, int m, uint64_t seed) {
  if (n < 1 || n > 64) throw InputError("generator needs 1 <= n <= 64");
  if (m < 1) throw InputError("generator needs m >= 1");
  if (n < 64 && static_cast<uint64_t>(m) > (1ull << n))
    throw InputError("m = " + std::to_string(m) + " distinct strings do not fit in 2^" +
                     std::to_string(n));

  const uint64_t mask = n == 64 ? ~0ull : (1ull << n) - 1;
  Xoshiro256 rng(seed);
  std::unordered_set<uint64_t> seen;
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(static_cast<size_t>(m));
  while (static_cast<int>(rows.size()) < m) {
    const uint64_t value = rng.next() & mask;
    if (!seen.insert(value).second) continue;
    std::vector<Symbol> row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
      row[static_cast<size_t>(j)] = static_cast<Symbol>((value >> (n - 1 - j)) & 1);
    rows.push_back(std::move(row));
  }
  return StringSet::from_symbols(n, 2, std::move(rows));
}

uint64_t trial_seed(uint64_t master, int n, int m, int k, int trial) {
  uint64_t h = master;
  for (uint64_t v : {static_cast<uint64_t>(n), static_cast<uint64_t>(m),
                     static_cast<uint64_t>(k), static_cast<uint64_t>(trial)})
    h = mix64(h ^ (v + 0x9e3779b97f4a7c15ull));
  return h;
}

namespace {

bool noinfo_heuristic(int m, int k) {
  // m >= k * 2^k, guarded against shift overflow.
  if (k >= 63) return false;
  const uint64_t threshold = sat_mul(static_cast<uint64_t>(k), 1ull << k);
  return static_cast<uint64_t>(m) >= threshold;
}

BenchRecord run_one(const StringSet& data, int n, int m, int k, int trial,
                    uint64_t seed, Engine engine, const ExperimentConfig& cfg) {
  BenchRecord record;
  record.n = n;
  record.m = m;
  record.k = k;
  record.trial = trial;
  record.seed = seed;
  record.engine = engine;
  record.noinfo_flag = noinfo_heuristic(m, k);

  EngineOptions opts;
  opts.guard = cfg.guard;
  opts.parallel = cfg.parallel_engines;

  const auto start = std::chrono::steady_clock::now();
  try {
    if (engine == Engine::kGreedy) {
      GreedyOptions gopts;
      gopts.parallel = cfg.parallel_engines;
      const GreedyResult result = recon_greedy(data, k, gopts);
      record.extra_strings = result.report.extras;
      record.greedy_checks = result.trace.checks;
    } else {
      record.extra_strings = recon(data, k, engine, opts).extras;
    }
  } catch (const ResourceError&) {
    record.error = true;
    return record;
  }
  const auto stop = std::chrono::steady_clock::now();
  record.runtime_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  record.normalized_runtime =
      record.runtime_ms / static_cast<double>(binomial(n, k - 1));
  return record;
}

}  // namespace

std::vector<BenchRecord> run_experiment(const ExperimentConfig& cfg) {
  if (cfg.n_values.empty() || cfg.m_values.empty())
    throw InputError("experiment needs at least one n and one m");
  if (cfg.trials.has_value() && *cfg.trials < 1)
    throw InputError("trials must be >= 1");
  if (cfg.engines.empty()) throw InputError("experiment needs at least one engine");
  for (int n : cfg.n_values) {
    if (n < 1 || n > 64) throw InputError("n out of range [1, 64]");
    for (int m : cfg.m_values)
      if (n < 64 && static_cast<uint64_t>(m) > (1ull << n))
        throw InputError("cell n=" + std::to_string(n) + " m=" + std::to_string(m) +
                         " infeasible: m > 2^n");
  }

  std::vector<BenchRecord> records;
  for (int n : cfg.n_values) {
    for (int m : cfg.m_values) {
      const int trials = cfg.trials.value_or(m >= 500 ? 10 : 30);
      std::vector<int> ks = cfg.k_values;
      if (ks.empty()) {
        ks.resize(static_cast<size_t>(n));
        for (int k = 1; k <= n; ++k) ks[static_cast<size_t>(k - 1)] = k;
      }
      for (int k : ks) {
        if (k < 1) throw InputError("k must be >= 1");
        if (k > n) continue;  // cell not meaningful for this n
        for (int trial = 0; trial < trials; ++trial) {
          const uint64_t seed = trial_seed(cfg.seed, n, m, k, trial);
          const StringSet data = gen_random_set(n, m, seed);
          for (Engine engine : cfg.engines)
            records.push_back(run_one(data, n, m, k, trial, seed, engine, cfg));
        }
      }
    }
  }

  std::sort(records.begin(), records.end(),
            [](const BenchRecord& a, const BenchRecord& b) {
              if (a.n != b.n) return a.n < b.n;
              if (a.m != b.m) return a.m < b.m;
              if (a.k != b.k) return a.k < b.k;
              if (a.trial != b.trial) return a.trial < b.trial;
              return engine_name(a.engine) < engine_name(b.engine);
            });
  return records;
}

const char* const kCsvHeader =
    "n,m,k,trial,seed,engine,runtime_ms,extra_strings,greedy_checks,"
    "normalized_runtime,noinfo_flag";

std::string record_csv_line(const BenchRecord& record) {
  std::string line = std::to_string(record.n) + ',' + std::to_string(record.m) +
                     ',' + std::to_string(record.k) + ',' +
                     std::to_string(record.trial) + ',' +
                     std::to_string(record.seed) + ',' +
                     std::string(engine_name(record.engine)) + ',';
  char buffer[64];
  if (record.error) {
    line += "-,-,-,-,";
  } else {
    std::snprintf(buffer, sizeof buffer, "%.6f", record.runtime_ms);
    line += buffer;
    line += ',' + std::to_string(record.extra_strings) + ',';
    if (record.greedy_checks.has_value())
      line += std::to_string(*record.greedy_checks);
    else
      line += '-';
    std::snprintf(buffer, sizeof buffer, "%.9f", record.normalized_runtime);
    line += ',';
    line += buffer;
    line += ',';
  }
  line += record.noinfo_flag ? '1' : '0';
  return line;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& record : records) out << record_csv_line(record) << '\n';
}

}  // namespace kproj
