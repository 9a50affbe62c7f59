#include "doctest.h"

#include <random>

#include "orbitkit/upword.hpp"
#include "../support/test_support.hpp"

using namespace orbitkit;
namespace ts = orbitkit::testsupport;

TEST_CASE("canonicalization shrinks non-primitive periods") {
  UPWord x = up_canonicalize({}, {0, 1, 0, 1});
  CHECK(x.pre.empty());
  CHECK(x.period == Word{0, 1});
}

TEST_CASE("canonicalization absorbs the preperiod") {
  // 10 0^ω = 1 0^ω
  UPWord x = up_canonicalize({1, 0}, {0});
  CHECK(x.pre == Word{1});
  CHECK(x.period == Word{0});
}

TEST_CASE("canonicalization against naive expansion") {
  // 1' (00)^ω over a 3-letter alphabet: letter 2 stands in for 1'
  UPWord x = up_canonicalize({2}, {0, 0});
  CHECK(x.pre == Word{2});
  CHECK(x.period == Word{0});
  CHECK(ts::expand_up({2}, {0, 0}, 8) == up_prefix(x, 8));
}

TEST_CASE("empty period is rejected") {
  CHECK_THROWS_AS(up_canonicalize({0}, {}), PreconditionError);
}

TEST_CASE("canonical forms decide ω-word equality") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 5), plen(1, 4), letter(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    Word pre1, per1, pre2, per2;
    for (int i = len(rng); i-- > 0;) pre1.push_back(letter(rng));
    for (int i = plen(rng); i-- > 0;) per1.push_back(letter(rng));
    for (int i = len(rng); i-- > 0;) pre2.push_back(letter(rng));
    for (int i = plen(rng); i-- > 0;) per2.push_back(letter(rng));
    UPWord x1 = up_canonicalize(pre1, per1);
    UPWord x2 = up_canonicalize(pre2, per2);
    // comparing far enough decides equality for these sizes
    const std::size_t depth = 2 * (pre1.size() + pre2.size() + per1.size() * per2.size()) + 8;
    const bool streams_equal = ts::expand_up(pre1, per1, depth) == ts::expand_up(pre2, per2, depth);
    CHECK(streams_equal == (x1 == x2));
    // canonicalizing never changes the denoted stream
    CHECK(ts::expand_up(x1.pre, x1.period, depth) == ts::expand_up(pre1, per1, depth));
  }
}
