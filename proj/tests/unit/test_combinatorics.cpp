#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "symtensor/combinatorics.hpp"
#include "symtensor/errors.hpp"
#include "test_support.hpp"

using namespace symtensor;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("sym_dimension examples") {
  CHECK(sym_dimension(4, 3) == 15);
  CHECK(sym_dimension(1, 7) == 7);
  CHECK(sym_dimension(6, 10) == 5005);
  CHECK(sym_dimension(0, 5) == 1);
}

TEST_CASE("sym_dimension rejects 64-bit overflow") {
  CHECK_THROWS_AS((void)sym_dimension(200, 200), OverflowError);
  CHECK_THROWS_AS((void)binomial(200, 100), OverflowError);
  // C(67, 33) is the largest central binomial that fits
  CHECK(binomial(67, 33) == 14226520737620288370ULL);
  CHECK_THROWS_AS((void)binomial(68, 34), OverflowError);
}

TEST_CASE("multinomial examples") {
  CHECK(multinomial(ExponentVector({1, 1, 1})) == 6);
  CHECK(multinomial(ExponentVector({0, 0, 0, 5})) == 1);

  // (1,3) counted by enumerating the tuples of {0,1}^4 with one 0 and three 1s
  std::size_t count = 0;
  for (const auto& j : testing::all_tuples(4, 2)) {
    if (std::count(j.begin(), j.end(), 0) == 1) ++count;
  }
  CHECK(count == 4);
  CHECK(multinomial(ExponentVector({1, 3})) == count);
}

TEST_CASE("multinomial overflow is reported") {
  CHECK_THROWS_AS((void)multinomial(ExponentVector(std::vector<unsigned>(30, 1))), OverflowError);
}

TEST_CASE("enumerate_exponents order and size") {
  const auto e = enumerate_exponents(2, 2);
  REQUIRE(e.size() == 3);
  CHECK(e[0] == ExponentVector({2, 0}));
  CHECK(e[1] == ExponentVector({1, 1}));
  CHECK(e[2] == ExponentVector({0, 2}));

  const auto zero = enumerate_exponents(0, 3);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == ExponentVector({0, 0, 0}));

  CHECK(enumerate_exponents(3, 3).size() == 10);
  CHECK(std::is_sorted(e.begin(), e.end()));
}

TEST_CASE("enumeration count matches sym_dimension for k <= 8, n <= 6") {
  for (unsigned k = 0; k <= 8; ++k) {
    for (unsigned n = 1; n <= 6; ++n) {
      const auto e = enumerate_exponents(k, n);
      CHECK(e.size() == sym_dimension(k, n));
      CHECK(std::set<ExponentVector>(e.begin(), e.end()).size() == e.size());
      CHECK(std::is_sorted(e.begin(), e.end()));
      for (const auto& p : e) CHECK(p.degree() == k);
    }
  }
}

TEST_CASE("multinomials sum to n^k") {
  for (unsigned k = 0; k <= 6; ++k) {
    for (unsigned n = 1; n <= 5; ++n) {
      std::uint64_t total = 0;
      for (const auto& p : enumerate_exponents(k, n)) total += multinomial(p);
      CHECK(total == ipow(n, k));
    }
  }
}

TEST_CASE("multinomial equals class size by brute enumeration") {
  for (unsigned k = 1; k <= 5; ++k) {
    for (std::size_t n = 1; n <= 3; ++n) {
      std::map<ExponentVector, std::uint64_t> counts;
      for (const auto& j : testing::all_tuples(k, n)) {
        std::vector<unsigned> e(n, 0);
        for (auto i : j) ++e[i];
        ++counts[ExponentVector(e)];
      }
      for (const auto& [p, c] : counts) CHECK(multinomial(p) == c);
    }
  }
}

TEST_CASE("index_to_exponent") {
  // 0-based versions of (1,2,2), (2,1,2), (3,3,3,3)
  CHECK(index_to_exponent(IndexTuple{0, 1, 1}, 2) == ExponentVector({1, 2}));
  CHECK(index_to_exponent(IndexTuple{1, 0, 1}, 2) == ExponentVector({1, 2}));
  CHECK(index_to_exponent(IndexTuple{2, 2, 2, 2}, 3) == ExponentVector({0, 0, 4}));
  CHECK_THROWS_AS((void)index_to_exponent(IndexTuple{0, 3}, 3), ValidationError);
}

TEST_CASE("index_to_exponent is permutation invariant") {
  for (int trial = 0; trial < 200; ++trial) {
    const auto k = static_cast<unsigned>(testing::uniform_int(1, 7));
    const auto n = static_cast<std::size_t>(testing::uniform_int(1, 5));
    IndexTuple j(k);
    for (auto& i : j) i = static_cast<std::size_t>(testing::uniform_int(0, static_cast<int>(n) - 1));
    IndexTuple shuffled = j;
    std::shuffle(shuffled.begin(), shuffled.end(), testing::rng());
    const auto p = index_to_exponent(j, n);
    CHECK(index_to_exponent(shuffled, n) == p);
    CHECK(p.degree() == k);
    CHECK(exponent_to_index(p) == [&] {
      auto s = j;
      std::sort(s.begin(), s.end());
      return s;
    }());
  }
}
