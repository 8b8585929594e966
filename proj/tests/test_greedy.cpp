#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "kproj/bits.hpp"
#include "kproj/core.hpp"
#include "kproj/greedy.hpp"
#include "kproj/ordering.hpp"

using namespace kproj;
using namespace kproj::testutil;

namespace {

// Number of length-i prefixes consistent with every k-window inside the
// processed prefix; brute-force oracle for the stage invariant.
uint64_t consistent_prefixes(const StringSet& s, int k, int i) {
  uint64_t count = 0;
  for (uint64_t v = 0; v < (1ull << i); ++v) {
    bool ok = true;
    for_each_combination(i, k, [&](const std::vector<int>& combo) {
      bool match = false;
      for (int r = 0; r < s.size() && !match; ++r) {
        match = true;
        for (int c : combo) {
          const Symbol sym = static_cast<Symbol>((v >> (i - 1 - c)) & 1);
          if (s.symbol(r, c) != sym) {
            match = false;
            break;
          }
        }
      }
      if (!match) ok = false;
      return ok;
    });
    if (ok) ++count;
  }
  return count;
}

uint64_t lemma_sum(int n, int k) {
  uint64_t total = 0;
  for (int i = k; i <= n - 1; ++i)
    total += (1ull << (i + 1)) * binomial(i, k - 1);
  return total;
}

}  // namespace

TEST_CASE("greedy fixtures") {
  SUBCASE("perfect fixture") {
    GreedyResult r = recon_greedy(fig1(), 2);
    CHECK(r.report.extras == 0);
    CHECK(r.report.members.same_set(fig1()));
    CHECK(r.trace.frontier_sizes.front() == 3);
    CHECK(r.trace.frontier_sizes.back() == 3);
  }
  SUBCASE("even parity at k=2 reconstructs the full cube with 16 checks") {
    GreedyResult r = recon_greedy(parity(3), 2);
    CHECK(r.report.members.size() == 8);
    CHECK(r.trace.checks == 16);
    CHECK(r.trace.frontier_sizes == std::vector<uint64_t>{4, 8});
  }
  SUBCASE("k=n is the single full window") {
    GreedyResult r = recon_greedy(fig3(), 5);
    CHECK(r.report.members.same_set(fig3()));
    CHECK(r.trace.checks == 0);
  }
  SUBCASE("k=1 yields the product set") {
    GreedyResult r = recon_greedy(fig1(), 1);
    CHECK(r.report.members.same_set(recon_product(fig1()).members));
  }
  SUBCASE("k out of range") {
    CHECK_THROWS_AS(recon_greedy(fig1(), 0), InputError);
    CHECK_THROWS_AS(recon_greedy(fig1(), 4), InputError);
  }
}

TEST_CASE("greedy equals the brute oracle") {
  Xoshiro256 rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    StringSet s = random_set(rng, 10, 40);
    for (int k = 1; k <= s.length(); ++k) {
      GreedyResult r = recon_greedy(s, k);
      ReconReport brute = recon_brute(s, k);
      CHECK(r.report.members.same_set(brute.members));
      CHECK(r.report.extras == brute.extras);
    }
  }
  // General alphabet path.
  for (int trial = 0; trial < 8; ++trial) {
    StringSet s = random_general(rng, 5, 10, 3);
    for (int k = 1; k <= s.length(); ++k)
      CHECK(recon_greedy(s, k).report.members.same_set(recon_brute(s, k).members));
  }
}

TEST_CASE("greedy stage invariant") {
  Xoshiro256 rng(103);
  for (int trial = 0; trial < 12; ++trial) {
    StringSet s = random_set(rng, 8, 24);
    for (int k = 1; k <= s.length(); ++k) {
      GreedyResult r = recon_greedy(s, k);
      REQUIRE(r.trace.frontier_sizes.size() ==
              static_cast<size_t>(s.length() - k + 1));
      for (int i = k; i <= s.length(); ++i)
        CHECK(r.trace.frontier_sizes[static_cast<size_t>(i - k)] ==
              consistent_prefixes(s, k, i));
    }
  }
}

TEST_CASE("greedy check counting matches the no-information formula") {
  Xoshiro256 rng(107);
  int verified = 0;
  while (verified < 12) {
    const int n = 8 + static_cast<int>(rng.below(3));
    const int k = 1 + static_cast<int>(rng.below(3));
    const uint64_t want = static_cast<uint64_t>(k) << k;  // k * 2^k
    const int m = static_cast<int>(
        std::min<uint64_t>(1ull << n, want + rng.below(want + 8)));
    StringSet s = gen_random_set(n, m, rng.next());
    if (point_of_no_information(s) < k) continue;
    GreedyResult r = recon_greedy(s, k);
    CHECK(r.trace.checks == lemma_sum(n, k));
    CHECK(r.trace.checks <= (1ull << (n + 1)) * binomial(n, k - 1));
    ++verified;
  }
}

TEST_CASE("greedy accepts any column ordering without changing the members") {
  Xoshiro256 rng(109);
  for (int trial = 0; trial < 12; ++trial) {
    StringSet s = random_set(rng, 9, 32);
    ColumnOrdering ord = order_columns(s);
    for (int k = 1; k <= s.length(); ++k) {
      GreedyOptions opts;
      opts.ordering = ord;
      GreedyResult with_ord = recon_greedy(s, k, opts);
      GreedyResult identity = recon_greedy(s, k);
      CHECK(with_ord.report.members.same_set(identity.report.members));
    }
  }
}
