#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace symtensor {

/// Exponent vector p = (p_1, ..., p_n) of a monomial x^p, with cached
/// degree |p|. Ordering is graded lexicographic: lower degree first, then
/// larger leading exponents first, so (2,0) < (1,1) < (0,2).
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<unsigned> exponents);

  /// The exponent vector with a single nonzero entry `degree` at `var`.
  static ExponentVector unit(std::size_t nvars, std::size_t var, unsigned degree = 1);

  [[nodiscard]] std::size_t size() const { return exponents_.size(); }
  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] unsigned operator[](std::size_t i) const { return exponents_[i]; }
  [[nodiscard]] std::span<const unsigned> exponents() const { return exponents_; }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  friend std::strong_ordering operator<=>(const ExponentVector& a, const ExponentVector& b);

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// Index tuple j = (j_1, ..., j_k); entries are 0-based positions in [0, n).
using IndexTuple = std::vector<std::size_t>;

/// Binomial coefficient C(n, k) in 64 bits; throws OverflowError if the
/// result does not fit.
[[nodiscard]] std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// dim S^k(C^n) = C(n+k-1, k).
[[nodiscard]] std::uint64_t sym_dimension(unsigned order, unsigned dim);

/// k! / (p_1! ... p_n!), the number of index tuples in the class of p.
[[nodiscard]] std::uint64_t multinomial(const ExponentVector& p);

/// All exponent vectors of degree `order` in `dim` variables, graded-lex.
[[nodiscard]] std::vector<ExponentVector> enumerate_exponents(unsigned order, unsigned dim);

/// Multiplicity count of each index in `j`. Throws ValidationError when an
/// index is outside [0, dim).
[[nodiscard]] ExponentVector index_to_exponent(std::span<const std::size_t> j, std::size_t dim);

/// The sorted (canonical) index tuple of the class of `p`.
[[nodiscard]] IndexTuple exponent_to_index(const ExponentVector& p);

/// n^k with overflow detection.
[[nodiscard]] std::uint64_t checked_power(std::uint64_t base, unsigned exponent);

}  // namespace symtensor
