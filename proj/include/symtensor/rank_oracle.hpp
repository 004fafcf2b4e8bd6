#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace symtensor {

/// Closed-form facts about the generic symmetric rank of S^k(C^n).
struct RankReport {
  unsigned order = 0;
  unsigned dim = 0;
  std::uint64_t generic_rank = 0;
  bool is_exception = false;
  std::uint64_t lower_bound = 0;
  std::uint64_t upper_bound = 0;
  std::uint64_t fiber_dim = 0;
  /// Unset on the four Alexander-Hirschowitz exceptions.
  std::optional<bool> finitely_many_decompositions;
};

/// True for (k,n) in {(3,5), (4,3), (4,4), (4,5)}.
[[nodiscard]] bool is_ah_exception(unsigned order, unsigned dim);

/// ceil(C(n+k-1,k) / n), plus one on the exceptions. Order must exceed 2.
[[nodiscard]] std::uint64_t generic_symmetric_rank(unsigned order, unsigned dim);

/// n * generic_rank - C(n+k-1, k).
[[nodiscard]] std::uint64_t fiber_dimension(unsigned order, unsigned dim);

/// Whether a generic tensor has finitely many decompositions of generic
/// length, i.e. n divides C(n+k-1,k). Throws NotApplicableError on exceptions.
[[nodiscard]] bool finitely_many_generic_decompositions(unsigned order, unsigned dim);

/// (ceil(C(n+k-1,k)/n), C(n+k-2,k-1)).
[[nodiscard]] std::pair<std::uint64_t, std::uint64_t> symmetric_rank_bounds(unsigned order, unsigned dim);

/// Maximal symmetric rank of binary forms of degree k, which is k.
[[nodiscard]] unsigned max_symmetric_rank_binary(unsigned order);

[[nodiscard]] RankReport rank_report(unsigned order, unsigned dim);

/// Values over an inclusive (k, n) grid; rows indexed by order.
struct RankTable {
  unsigned order_min = 0, order_max = 0, dim_min = 0, dim_max = 0;
  std::vector<std::vector<std::uint64_t>> values;
  std::vector<std::vector<bool>> exception;
};

[[nodiscard]] RankTable generic_rank_table(unsigned order_min, unsigned order_max, unsigned dim_min,
                                           unsigned dim_max);
[[nodiscard]] RankTable fiber_dimension_table(unsigned order_min, unsigned order_max, unsigned dim_min,
                                              unsigned dim_max);

}  // namespace symtensor
