#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kproj/errors.hpp"

namespace kproj {

using Symbol = uint8_t;

// A set of 0-based column indices defining a projection. Indices are kept
// strictly increasing; "k-window" means a window of size k.
class Window {
 public:
  explicit Window(std::vector<int> indices);
  static Window full(int n);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }

  // Throws InputError unless every index fits a length-n string.
  void check_against(int n) const;

  std::string to_string() const;  // "0,2,5"

 private:
  std::vector<int> indices_;
};

// m distinct length-n strings over a digit alphabet [0, alphabet).
// Rows keep their construction order; set-level queries go through a
// sorted row index. Binary sets with n <= 64 additionally carry one packed
// machine word per row (column 0 at the most significant of the n bits,
// so packed order equals lexicographic order); hot loops use those words.
class StringSet {
 public:
  // Rows as ASCII digit strings, e.g. {"001", "011", "100"}.
  StringSet(int n, int alphabet, const std::vector<std::string>& rows);

  static StringSet from_symbols(int n, int alphabet,
                                std::vector<std::vector<Symbol>> rows);

  // One string per line, ASCII digits, blank lines and '#' comments
  // ignored. Lines must all have equal length; duplicates are rejected.
  // Alphabet is inferred as max(2, max digit + 1) unless overridden.
  static StringSet parse(std::istream& in,
                         std::optional<int> alphabet_override = std::nullopt);
  static StringSet parse_file(const std::string& path,
                              std::optional<int> alphabet_override = std::nullopt);

  int length() const { return n_; }
  int alphabet() const { return alphabet_; }
  int size() const { return m_; }

  Symbol symbol(int row, int col) const {
    return symbols_[static_cast<size_t>(row) * static_cast<size_t>(n_) +
                    static_cast<size_t>(col)];
  }
  std::span<const Symbol> row(int i) const {
    return {symbols_.data() + static_cast<size_t>(i) * static_cast<size_t>(n_),
            static_cast<size_t>(n_)};
  }
  std::string row_digits(int i) const;

  bool binary_packed() const { return !packed_.empty(); }
  uint64_t packed_row(int i) const { return packed_[static_cast<size_t>(i)]; }

  bool contains(std::span<const Symbol> candidate) const;
  bool contains_digits(std::string_view digits) const;

  // Row keys in sorted order; keys are the packed big-endian base-a values
  // (they compare like the digit strings). Requires a^n to fit in 64 bits.
  std::vector<uint64_t> sorted_keys() const;

  // The base-a value of a row; requires a^n to fit in 64 bits.
  uint64_t row_key(int i) const;

  bool same_set(const StringSet& other) const;

  void write(std::ostream& out) const;

  // Empty placeholder for deferred assignment; every factory and parser
  // enforces m >= 1.
  StringSet() = default;

 private:
  void index_rows();

  int n_ = 0;
  int alphabet_ = 2;
  int m_ = 0;
  std::vector<Symbol> symbols_;     // m * n, row-major
  std::vector<uint64_t> packed_;    // per-row words when alphabet==2, n<=64
  std::vector<int> order_;          // row ids sorted by content
};

// Helpers shared by parsing and the CLI.
std::vector<Symbol> digits_to_symbols(std::string_view digits, int alphabet);
std::string symbols_to_digits(std::span<const Symbol> symbols);

// The set of length-|w| patterns seen in a window, packed as big-endian
// base-a values, sorted and deduplicated.
struct Projection {
  Window window;
  std::vector<uint64_t> patterns;
};

// Packs row[w] as a big-endian base-a integer. Throws ResourceError when
// alphabet^|w| does not fit in 64 bits.
uint64_t pack_pattern(std::span<const Symbol> row, const Window& w, int alphabet);
std::string pattern_digits(uint64_t pattern, int width, int alphabet);

// Result of computing a k-reconstruction: the members (sorted, containing
// the input set) and how many of them were not in the input.
struct ReconReport {
  int k = 0;
  StringSet members;
  int extras = 0;
};

}  // namespace kproj
