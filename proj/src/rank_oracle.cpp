#include "symtensor/rank_oracle.hpp"

#include <string>
#include <tuple>

#include "symtensor/combinatorics.hpp"
#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

void require_generic_range(unsigned order, unsigned dim) {
  if (order <= 2) {
    throw UnsupportedOrderError("generic symmetric rank formula needs order > 2 (got " + std::to_string(order) +
                                ")");
  }
  if (dim < 2) throw ValidationError("generic symmetric rank needs dimension >= 2");
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

template <typename Fn>
RankTable make_table(unsigned kmin, unsigned kmax, unsigned nmin, unsigned nmax, Fn&& value) {
  if (kmin > kmax || nmin > nmax) throw ValidationError("empty table range");
  RankTable t{kmin, kmax, nmin, nmax, {}, {}};
  for (unsigned k = kmin; k <= kmax; ++k) {
    auto& row = t.values.emplace_back();
    auto& mask = t.exception.emplace_back();
    for (unsigned n = nmin; n <= nmax; ++n) {
      row.push_back(value(k, n));
      mask.push_back(is_ah_exception(k, n));
    }
  }
  return t;
}

}  // namespace

bool is_ah_exception(unsigned order, unsigned dim) {
  return (order == 3 && dim == 5) || (order == 4 && (dim == 3 || dim == 4 || dim == 5));
}

std::uint64_t generic_symmetric_rank(unsigned order, unsigned dim) {
  require_generic_range(order, dim);
  return ceil_div(sym_dimension(order, dim), dim) + (is_ah_exception(order, dim) ? 1 : 0);
}

std::uint64_t fiber_dimension(unsigned order, unsigned dim) {
  return static_cast<std::uint64_t>(dim) * generic_symmetric_rank(order, dim) - sym_dimension(order, dim);
}

bool finitely_many_generic_decompositions(unsigned order, unsigned dim) {
  require_generic_range(order, dim);
  if (is_ah_exception(order, dim)) {
    throw NotApplicableError("finiteness criterion does not cover the exceptional pair (" + std::to_string(order) +
                             "," + std::to_string(dim) + ")");
  }
  return sym_dimension(order, dim) % dim == 0;
}

std::pair<std::uint64_t, std::uint64_t> symmetric_rank_bounds(unsigned order, unsigned dim) {
  require_generic_range(order, dim);
  return {ceil_div(sym_dimension(order, dim), dim), binomial(static_cast<std::uint64_t>(dim) + order - 2, order - 1)};
}

unsigned max_symmetric_rank_binary(unsigned order) {
  if (order == 0) throw ValidationError("order must be at least 1");
  return order;
}

RankReport rank_report(unsigned order, unsigned dim) {
  RankReport r;
  r.order = order;
  r.dim = dim;
  r.generic_rank = generic_symmetric_rank(order, dim);
  r.is_exception = is_ah_exception(order, dim);
  std::tie(r.lower_bound, r.upper_bound) = symmetric_rank_bounds(order, dim);
  r.fiber_dim = fiber_dimension(order, dim);
  if (!r.is_exception) r.finitely_many_decompositions = finitely_many_generic_decompositions(order, dim);
  return r;
}

RankTable generic_rank_table(unsigned order_min, unsigned order_max, unsigned dim_min, unsigned dim_max) {
  return make_table(order_min, order_max, dim_min, dim_max, generic_symmetric_rank);
}

RankTable fiber_dimension_table(unsigned order_min, unsigned order_max, unsigned dim_min, unsigned dim_max) {
  return make_table(order_min, order_max, dim_min, dim_max, fiber_dimension);
}

}  // namespace symtensor
