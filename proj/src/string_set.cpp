#include "kproj/string_set.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "kproj/bits.hpp"

namespace kproj {

Window::Window(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw InputError("window must be nonempty");
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (indices_[i] < 0) throw InputError("window index must be nonnegative");
    if (i > 0 && indices_[i] <= indices_[i - 1])
      throw InputError("window indices must be strictly increasing");
  }
}

Window Window::full(int n) {
  std::vector<int> all(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
  return Window(std::move(all));
}

void Window::check_against(int n) const {
  if (indices_.back() >= n)
    throw InputError("window index " + std::to_string(indices_.back()) +
                     " out of range for length " + std::to_string(n));
}

std::string Window::to_string() const {
  std::string out;
  for (size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(indices_[i]);
  }
  return out;
}

std::vector<Symbol> digits_to_symbols(std::string_view digits, int alphabet) {
  std::vector<Symbol> out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '0' || c > '9')
      throw InputError(std::string("invalid symbol character '") + c + "'");
    int v = c - '0';
    if (v >= alphabet)
      throw InputError("symbol " + std::to_string(v) +
                       " outside alphabet of size " + std::to_string(alphabet));
    out.push_back(static_cast<Symbol>(v));
  }
  return out;
}

std::string symbols_to_digits(std::span<const Symbol> symbols) {
  std::string out;
  out.reserve(symbols.size());
  for (Symbol s : symbols) out += static_cast<char>('0' + s);
  return out;
}

StringSet StringSet::from_symbols(int n, int alphabet,
                                  std::vector<std::vector<Symbol>> rows) {
  if (n < 1) throw InputError("string length must be positive");
  if (alphabet < 2) throw InputError("alphabet size must be at least 2");
  if (rows.empty()) throw InputError("string set must be nonempty");

  StringSet s;
  s.n_ = n;
  s.alphabet_ = alphabet;
  s.m_ = static_cast<int>(rows.size());
  s.symbols_.reserve(rows.size() * static_cast<size_t>(n));
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n)
      throw InputError("row length " + std::to_string(row.size()) +
                       " differs from declared length " + std::to_string(n));
    for (Symbol v : row) {
      if (v >= alphabet)
        throw InputError("symbol " + std::to_string(int(v)) +
                         " outside alphabet of size " + std::to_string(alphabet));
    }
    s.symbols_.insert(s.symbols_.end(), row.begin(), row.end());
  }
  if (alphabet == 2 && n <= 64) {
    s.packed_.reserve(rows.size());
    for (int i = 0; i < s.m_; ++i) {
      uint64_t word = 0;
      for (int j = 0; j < n; ++j)
        word |= static_cast<uint64_t>(s.symbol(i, j)) << (n - 1 - j);
      s.packed_.push_back(word);
    }
  }
  s.index_rows();
  return s;
}

StringSet::StringSet(int n, int alphabet, const std::vector<std::string>& rows) {
  std::vector<std::vector<Symbol>> symbol_rows;
  symbol_rows.reserve(rows.size());
  for (const auto& r : rows) symbol_rows.push_back(digits_to_symbols(r, alphabet));
  *this = from_symbols(n, alphabet, std::move(symbol_rows));
}

void StringSet::index_rows() {
  order_.resize(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) order_[static_cast<size_t>(i)] = i;
  auto cmp = [this](int a, int b) {
    return std::lexicographical_compare(row(a).begin(), row(a).end(),
                                        row(b).begin(), row(b).end());
  };
  std::sort(order_.begin(), order_.end(), cmp);
  for (int i = 0; i + 1 < m_; ++i) {
    auto a = row(order_[static_cast<size_t>(i)]);
    auto b = row(order_[static_cast<size_t>(i + 1)]);
    if (std::equal(a.begin(), a.end(), b.begin(), b.end()))
      throw InputError("duplicate string: " +
                       symbols_to_digits(a) + " (sets may not repeat strings)");
  }
}

StringSet StringSet::parse(std::istream& in, std::optional<int> alphabet_override) {
  std::vector<std::string> lines;
  std::string line;
  int max_digit = 0;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    for (char c : line) {
      if (c < '0' || c > '9')
        throw InputError("line " + std::to_string(lineno) +
                         ": invalid character '" + std::string(1, c) + "'");
      max_digit = std::max(max_digit, c - '0');
    }
    if (!lines.empty() && line.size() != lines.front().size())
      throw InputError("line " + std::to_string(lineno) +
                       ": length differs from first string");
    lines.push_back(line);
  }
  if (lines.empty()) throw InputError("input contains no strings");

  int alphabet = alphabet_override.value_or(std::max(2, max_digit + 1));
  if (alphabet < max_digit + 1)
    throw InputError("alphabet override " + std::to_string(alphabet) +
                     " smaller than max digit " + std::to_string(max_digit));
  if (alphabet < 2) throw InputError("alphabet size must be at least 2");
  return StringSet(static_cast<int>(lines.front().size()), alphabet, lines);
}

StringSet StringSet::parse_file(const std::string& path,
                                std::optional<int> alphabet_override) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse(in, alphabet_override);
}

std::string StringSet::row_digits(int i) const { return symbols_to_digits(row(i)); }

bool StringSet::contains(std::span<const Symbol> candidate) const {
  if (static_cast<int>(candidate.size()) != n_) return false;
  auto cmp = [this, candidate](int id) {
    auto r = row(id);
    return std::lexicographical_compare(r.begin(), r.end(),
                                        candidate.begin(), candidate.end());
  };
  // Lower bound by hand: order_ holds row ids, compare row content.
  size_t lo = 0, hi = order_.size();
  while (lo < hi) {
    size_t mid = (lo + hi) / 2;
    if (cmp(order_[mid]))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == order_.size()) return false;
  auto r = row(order_[lo]);
  return std::equal(r.begin(), r.end(), candidate.begin(), candidate.end());
}

bool StringSet::contains_digits(std::string_view digits) const {
  if (static_cast<int>(digits.size()) != n_) return false;
  auto symbols = digits_to_symbols(digits, alphabet_);
  return contains(symbols);
}

uint64_t StringSet::row_key(int i) const {
  return pack_pattern(row(i), Window::full(n_), alphabet_);
}

std::vector<uint64_t> StringSet::sorted_keys() const {
  std::vector<uint64_t> keys;
  keys.reserve(static_cast<size_t>(m_));
  for (int id : order_) keys.push_back(row_key(id));
  return keys;
}

bool StringSet::same_set(const StringSet& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  for (size_t i = 0; i < order_.size(); ++i) {
    auto a = row(order_[i]);
    auto b = other.row(other.order_[i]);
    if (!std::equal(a.begin(), a.end(), b.begin(), b.end())) return false;
  }
  return true;
}

void StringSet::write(std::ostream& out) const {
  for (int i = 0; i < m_; ++i) out << row_digits(i) << '\n';
}

uint64_t pack_pattern(std::span<const Symbol> row, const Window& w, int alphabet) {
  unsigned __int128 space = 1;
  for (int i = 0; i < w.size(); ++i) {
    space *= static_cast<unsigned>(alphabet);
    if (space > (static_cast<unsigned __int128>(1) << 64))
      throw ResourceError("pattern space alphabet^" + std::to_string(w.size()) +
                          " exceeds 64 bits");
  }
  uint64_t value = 0;
  for (int idx : w.indices())
    value = value * static_cast<uint64_t>(alphabet) + row[static_cast<size_t>(idx)];
  return value;
}

std::string pattern_digits(uint64_t pattern, int width, int alphabet) {
  std::string out(static_cast<size_t>(width), '0');
  for (int i = width - 1; i >= 0; --i) {
    out[static_cast<size_t>(i)] =
        static_cast<char>('0' + pattern % static_cast<uint64_t>(alphabet));
    pattern /= static_cast<uint64_t>(alphabet);
  }
  return out;
}

}  // namespace kproj
