#include <doctest.h>

#include <array>

#include "symtensor/errors.hpp"
#include "symtensor/rank_oracle.hpp"

using namespace symtensor;

namespace {

// Published generic ranks for k = 3..6 (rows) and n = 2..10 (columns).
constexpr std::array<std::array<std::uint64_t, 9>, 4> kGenericRank{{
    {2, 4, 5, 8, 10, 12, 15, 19, 22},
    {3, 6, 10, 15, 21, 30, 42, 55, 72},
    {3, 7, 14, 26, 42, 66, 99, 143, 201},
    {4, 10, 21, 42, 77, 132, 215, 334, 501},
}};

// Published fiber dimensions on the same grid.
constexpr std::array<std::array<std::uint64_t, 9>, 4> kFiberDim{{
    {0, 2, 0, 5, 4, 0, 0, 6, 0},
    {1, 3, 5, 5, 0, 0, 6, 0, 5},
    {0, 0, 0, 4, 0, 0, 0, 0, 8},
    {1, 2, 0, 0, 0, 0, 4, 3, 5},
}};

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("generic rank table matches the published values") {
  for (unsigned k = 3; k <= 6; ++k) {
    for (unsigned n = 2; n <= 10; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(generic_symmetric_rank(k, n) == kGenericRank[k - 3][n - 2]);
    }
  }
}

TEST_CASE("fiber dimension table matches the published values") {
  for (unsigned k = 3; k <= 6; ++k) {
    for (unsigned n = 2; n <= 10; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(fiber_dimension(k, n) == kFiberDim[k - 3][n - 2]);
    }
  }
}

TEST_CASE("exceptions") {
  CHECK(is_ah_exception(3, 5));
  CHECK(is_ah_exception(4, 3));
  CHECK(is_ah_exception(4, 4));
  CHECK(is_ah_exception(4, 5));
  CHECK_FALSE(is_ah_exception(3, 4));
  CHECK_FALSE(is_ah_exception(2, 5));
  CHECK_FALSE(is_ah_exception(4, 6));
  CHECK(generic_symmetric_rank(4, 3) == 6);
  CHECK(generic_symmetric_rank(3, 5) == 8);
}

TEST_CASE("rank report for a quaternary quartic") {
  const auto r = rank_report(4, 4);
  CHECK(r.generic_rank == 10);
  CHECK(r.is_exception);
  CHECK_FALSE(r.finitely_many_decompositions.has_value());
  CHECK(r.fiber_dim == 5);
}

TEST_CASE("finiteness of generic decompositions") {
  CHECK(finitely_many_generic_decompositions(3, 4));  // 20 / 4
  CHECK_FALSE(finitely_many_generic_decompositions(3, 3));
  CHECK_THROWS_AS((void)finitely_many_generic_decompositions(4, 3), NotApplicableError);
  CHECK(rank_report(5, 2).finitely_many_decompositions == std::optional<bool>(true));
}

TEST_CASE("invalid inputs") {
  CHECK_THROWS_AS((void)generic_symmetric_rank(2, 3), UnsupportedOrderError);
  CHECK_THROWS_AS((void)generic_symmetric_rank(1, 3), UnsupportedOrderError);
  CHECK_THROWS_AS((void)generic_symmetric_rank(3, 1), ValidationError);
  CHECK_THROWS_AS((void)generic_symmetric_rank(3, 0), ValidationError);
}

TEST_CASE("rank bounds and binary maximum") {
  const auto [lo, hi] = symmetric_rank_bounds(3, 3);
  CHECK(lo == 4);
  CHECK(hi == 6);
  CHECK(max_symmetric_rank_binary(5) == 5);
}

TEST_CASE("rank invariants over the full small grid") {
  for (unsigned k = 3; k <= 12; ++k) {
    for (unsigned n = 2; n <= 12; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      const auto dim = choose(n + k - 1, k);
      const auto r = generic_symmetric_rank(k, n);
      const auto floor_rank = (dim + n - 1) / n;
      CHECK(r * n >= dim);
      CHECK(r == floor_rank + (is_ah_exception(k, n) ? 1u : 0u));
      CHECK(fiber_dimension(k, n) == n * r - dim);
      const auto [lo, hi] = symmetric_rank_bounds(k, n);
      CHECK(lo == floor_rank);
      CHECK(hi == choose(n + k - 2, k - 1));
      CHECK(lo <= r);
      if (!is_ah_exception(k, n)) {
        CHECK(finitely_many_generic_decompositions(k, n) == (dim % n == 0));
      }
    }
  }
}

TEST_CASE("table builders") {
  const auto g = generic_rank_table(3, 6, 2, 10);
  REQUIRE(g.values.size() == 4);
  REQUIRE(g.values[0].size() == 9);
  CHECK(g.values[1][1] == 6);
  CHECK(g.exception[1][1]);
  CHECK(g.exception[0][3]);
  CHECK_FALSE(g.exception[0][2]);
  const auto f = fiber_dimension_table(3, 6, 2, 10);
  CHECK(f.values[3][8] == 5);
  CHECK_THROWS_AS((void)generic_rank_table(2, 6, 2, 10), UnsupportedOrderError);
}
