#include "symtensor/combinatorics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError(std::string(what) + ": result exceeds 64 bits");
  }
  return out;
}

void enumerate_into(unsigned remaining, std::size_t var, std::vector<unsigned>& scratch,
                    std::vector<ExponentVector>& out) {
  if (var + 1 == scratch.size()) {
    scratch[var] = remaining;
    out.emplace_back(scratch);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    scratch[var] = e;
    enumerate_into(remaining - e, var + 1, scratch, out);
  }
}

}  // namespace

ExponentVector::ExponentVector(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0U)) {}

ExponentVector ExponentVector::unit(std::size_t nvars, std::size_t var, unsigned degree) {
  std::vector<unsigned> e(nvars, 0);
  e.at(var) = degree;
  return ExponentVector(std::move(e));
}

std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // larger leading exponent sorts first
    if (auto c = b.exponents_[i] <=> a.exponents_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // C(n-k+i, i) is exact at every step and increases monotonically
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw OverflowError("binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                          ") exceeds 64 bits");
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t sym_dimension(unsigned order, unsigned dim) {
  if (dim == 0) throw ValidationError("sym_dimension: dimension must be at least 1");
  return binomial(static_cast<std::uint64_t>(dim) + order - 1, order);
}

std::uint64_t multinomial(const ExponentVector& p) {
  // product of C(p_1 + ... + p_i, p_i)
  std::uint64_t result = 1;
  std::uint64_t running = 0;
  for (unsigned e : p.exponents()) {
    running += e;
    result = checked_mul(result, binomial(running, e), "multinomial");
  }
  return result;
}

std::vector<ExponentVector> enumerate_exponents(unsigned order, unsigned dim) {
  if (dim == 0) throw ValidationError("enumerate_exponents: dimension must be at least 1");
  std::vector<ExponentVector> out;
  out.reserve(sym_dimension(order, dim));
  std::vector<unsigned> scratch(dim, 0);
  enumerate_into(order, 0, scratch, out);
  return out;
}

ExponentVector index_to_exponent(std::span<const std::size_t> j, std::size_t dim) {
  std::vector<unsigned> counts(dim, 0);
  for (std::size_t idx : j) {
    if (idx >= dim) {
      throw ValidationError("index " + std::to_string(idx) + " out of range for dimension " +
                            std::to_string(dim));
    }
    ++counts[idx];
  }
  return ExponentVector(std::move(counts));
}

IndexTuple exponent_to_index(const ExponentVector& p) {
  IndexTuple j;
  j.reserve(p.degree());
  for (std::size_t i = 0; i < p.size(); ++i) j.insert(j.end(), p[i], i);
  return j;
}

std::uint64_t checked_power(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) out = checked_mul(out, base, "power");
  return out;
}

}  // namespace symtensor
