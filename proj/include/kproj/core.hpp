#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "kproj/string_set.hpp"

namespace kproj {

// Cap on brute-force candidate spaces (alphabet^n). Exceeding it raises
// ResourceError; there is no silent truncation.
struct EnumGuard {
  uint64_t cap = 1ull << 26;
};

// alphabet^n as a checked candidate count.
uint64_t candidate_space(const StringSet& s, const EnumGuard& guard,
                         const char* operation);

Projection project(const StringSet& s, const Window& w);

struct MemberResult {
  bool member = false;
  std::optional<Window> witness;  // lexicographically first failing k-window
};

// Is x in the k-reconstruction of s? When not, `witness` names one k-window
// whose pattern of x is absent from the projection.
MemberResult is_member(const StringSet& s, std::span<const Symbol> x, int k);
MemberResult is_member_digits(const StringSet& s, std::string_view x, int k);

// Ground-truth k-reconstruction: sieves all alphabet^n candidates against
// every k-window projection. Parallel over candidate blocks when asked;
// output order is canonical (sorted) regardless of schedule.
ReconReport recon_brute(const StringSet& s, int k, const EnumGuard& guard = {},
                        bool parallel = true);

// Definition-level serial reference: tests each candidate with is_member.
// Kept as the independent oracle for the sieve above.
ReconReport recon_brute_reference(const StringSet& s, int k,
                                  const EnumGuard& guard = {});

// Largest k whose every k-window projection contains all alphabet^k
// patterns; 0 when even k=1 carries information.
int point_of_no_information(const StringSet& s);

// Product test: |S| == product of per-column distinct-symbol counts.
// Linear time; the running product exits early once it exceeds |S|.
bool is_1_reconstructible(const StringSet& s);

// Whether Recon_2(S) == S, via pairwise-constraint (2-SAT) solution
// enumeration stopped at |S|+1 solutions. Binary alphabets only.
bool is_2_reconstructible(const StringSet& s);

// max over all strings x of the Hamming distance from x to the set.
int hamming_radius(const StringSet& s, const EnumGuard& guard = {});
int hamming_radius_serial(const StringSet& s, const EnumGuard& guard = {});

struct SparsityBound {
  int bound = 0;
  std::string witness;  // per-column majority string, as digits
};

// Column-minority bound: sort minority fractions decreasingly and take the
// longest prefix summing below 1 (capped at n). The witness is guaranteed
// to be in the bound-reconstruction of s.
SparsityBound sparsity_bound(const StringSet& s);

// k=1 reconstruction without candidate enumeration over the full alphabet
// space: the product of per-column symbol sets.
ReconReport recon_product(const StringSet& s, const EnumGuard& guard = {});

}  // namespace kproj
