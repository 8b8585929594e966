#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "kproj/string_set.hpp"

using namespace kproj;
using namespace kproj::testutil;

TEST_CASE("window validation") {
  CHECK_THROWS_AS(Window({}), InputError);
  CHECK_THROWS_AS(Window({2, 1}), InputError);
  CHECK_THROWS_AS(Window({1, 1}), InputError);
  CHECK_THROWS_AS(Window({-1, 0}), InputError);
  Window w({0, 2});
  CHECK(w.size() == 2);
  CHECK_THROWS_AS(w.check_against(2), InputError);
  w.check_against(3);
  CHECK(w.to_string() == "0,2");
}

TEST_CASE("parsing accepts comments, blanks, and infers the alphabet") {
  std::istringstream in("# header\n001\n\n011\n100\n");
  StringSet s = StringSet::parse(in);
  CHECK(s.size() == 3);
  CHECK(s.length() == 3);
  CHECK(s.alphabet() == 2);
  CHECK(s.row_digits(0) == "001");
  CHECK(s.contains_digits("100"));
  CHECK_FALSE(s.contains_digits("111"));
}

TEST_CASE("parsing rejects bad inputs") {
  SUBCASE("duplicates") {
    std::istringstream in("01\n01\n");
    CHECK_THROWS_AS(StringSet::parse(in), InputError);
  }
  SUBCASE("ragged lines") {
    std::istringstream in("01\n010\n");
    CHECK_THROWS_AS(StringSet::parse(in), InputError);
  }
  SUBCASE("empty input") {
    std::istringstream in("# nothing\n");
    CHECK_THROWS_AS(StringSet::parse(in), InputError);
  }
  SUBCASE("non-digit characters") {
    std::istringstream in("0a1\n");
    CHECK_THROWS_AS(StringSet::parse(in), InputError);
  }
  SUBCASE("alphabet override too small") {
    std::istringstream in("012\n");
    CHECK_THROWS_AS(StringSet::parse(in, 2), InputError);
  }
}

TEST_CASE("alphabet inference clamps to 2 and respects overrides") {
  std::istringstream all_zero("000\n");
  CHECK(StringSet::parse(all_zero).alphabet() == 2);
  std::istringstream ternary("012\n210\n");
  CHECK(StringSet::parse(ternary).alphabet() == 3);
  std::istringstream padded("01\n10\n");
  CHECK(StringSet::parse(padded, 4).alphabet() == 4);
}

TEST_CASE("binary packing matches symbols and lex order") {
  StringSet s = fig1();
  REQUIRE(s.binary_packed());
  CHECK(s.packed_row(0) == 0b001);
  CHECK(s.packed_row(2) == 0b100);
  for (int i = 0; i < s.size(); ++i)
    for (int j = 0; j < s.length(); ++j)
      CHECK(((s.packed_row(i) >> (s.length() - 1 - j)) & 1) == s.symbol(i, j));
  CHECK(s.sorted_keys() == std::vector<uint64_t>{1, 3, 4});
}

TEST_CASE("round trip through write and parse") {
  StringSet s = fig3();
  std::ostringstream out;
  s.write(out);
  std::istringstream in(out.str());
  CHECK(StringSet::parse(in).same_set(s));
}

TEST_CASE("pattern packing and rendering") {
  StringSet s = fig1();
  Window w({0, 2});
  CHECK(pack_pattern(s.row(0), w, 2) == 0b01);
  CHECK(pattern_digits(0b01, 2, 2) == "01");
  CHECK(pattern_digits(5, 4, 3) == "0012");
}
