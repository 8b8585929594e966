// Compares the OpenMP kernels against their serial references on generated
// datasets: candidate sieve, hamming scan, greedy frontier extension, and
// overlap candidate verification. Results are wall-clock medians.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "kproj/bench.hpp"
#include "kproj/core.hpp"
#include "kproj/greedy.hpp"
#include "kproj/overlap.hpp"

using namespace kproj;

namespace {

double time_ms(const std::function<void()>& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

double median_ms(int repeats, const std::function<void()>& f) {
  std::vector<double> times;
  times.reserve(static_cast<size_t>(repeats));
  for (int i = 0; i < repeats; ++i) times.push_back(time_ms(f));
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

void report(const char* kernel, const char* params, double serial, double parallel) {
  std::printf("%-24s %-24s %10.3f ms %10.3f ms %7.2fx\n", kernel, params, serial,
              parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel comparison"};
  int repeats = 5;
  uint64_t seed = 1;
  app.add_option("--repeats", repeats, "timed repetitions per kernel (median)");
  app.add_option("--seed", seed, "dataset seed");
  bool smoke = false;
  app.add_flag("--smoke", smoke, "tiny sizes, just exercise the kernels");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-24s %-24s %13s %13s %9s\n", "kernel", "params", "serial",
              "parallel", "speedup");

  {
    const int n = smoke ? 10 : 18;
    const int m = smoke ? 16 : 32;
    const int k = smoke ? 3 : 5;
    StringSet data = gen_random_set(n, m, seed);
    EnumGuard guard{1ull << 28};
    char params[64];
    std::snprintf(params, sizeof params, "n=%d m=%d k=%d", n, m, k);
    const double serial =
        median_ms(repeats, [&] { recon_brute(data, k, guard, false); });
    const double parallel =
        median_ms(repeats, [&] { recon_brute(data, k, guard, true); });
    report("brute sieve", params, serial, parallel);
  }

  {
    const int n = smoke ? 10 : 22;
    const int m = smoke ? 16 : 64;
    StringSet data = gen_random_set(n, m, seed);
    EnumGuard guard{1ull << 28};
    char params[64];
    std::snprintf(params, sizeof params, "n=%d m=%d", n, m);
    const double serial =
        median_ms(repeats, [&] { hamming_radius_serial(data, guard); });
    const double parallel = median_ms(repeats, [&] { hamming_radius(data, guard); });
    report("hamming radius", params, serial, parallel);
  }

  {
    const int n = smoke ? 12 : 20;
    const int m = smoke ? 20 : 30;
    const int k = smoke ? 3 : 5;
    StringSet data = gen_random_set(n, m, seed);
    char params[64];
    std::snprintf(params, sizeof params, "n=%d m=%d k=%d", n, m, k);
    const double serial = median_ms(repeats, [&] { recon_greedy_serial(data, k); });
    const double parallel = median_ms(repeats, [&] { recon_greedy(data, k); });
    report("greedy frontier", params, serial, parallel);
  }

  {
    const int n = smoke ? 12 : 16;
    const int m = smoke ? 20 : 40;
    const int k = smoke ? 3 : 4;
    StringSet data = gen_random_set(n, m, seed);
    char params[64];
    std::snprintf(params, sizeof params, "n=%d m=%d k=%d", n, m, k);
    const double serial = median_ms(repeats, [&] { recon_overlap_serial(data, k); });
    const double parallel = median_ms(repeats, [&] { recon_overlap(data, k); });
    report("overlap verification", params, serial, parallel);
  }

  return 0;
}
