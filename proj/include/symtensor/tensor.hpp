#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "symtensor/combinatorics.hpp"

namespace symtensor {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Per-mode factor of a multilinear transform (rows x cols).
using LinearMap = Eigen::MatrixXcd;

inline constexpr double kDefaultSymmetryTol = 1e-12;
inline constexpr double kDefaultRankTol = 1e-10;
inline constexpr std::uint64_t kDefaultMaxDenseEntries = 10'000'000;

/// Full cubical k-way array of dimension n, row-major with the first index
/// slowest. Order 0 holds a single scalar.
class DenseTensor {
 public:
  DenseTensor(unsigned order, std::size_t dim);
  DenseTensor(unsigned order, std::size_t dim, std::vector<Complex> entries);

  [[nodiscard]] unsigned order() const { return order_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return entries_.size(); }
  [[nodiscard]] std::span<const Complex> entries() const { return entries_; }

  [[nodiscard]] std::size_t offset(std::span<const std::size_t> j) const;
  [[nodiscard]] const Complex& at(std::span<const std::size_t> j) const { return entries_[offset(j)]; }
  Complex& at(std::span<const std::size_t> j) { return entries_[offset(j)]; }
  [[nodiscard]] const Complex& operator[](std::size_t off) const { return entries_[off]; }
  Complex& operator[](std::size_t off) { return entries_[off]; }

  [[nodiscard]] double max_abs() const;

 private:
  unsigned order_;
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// Advances `j` like an odometer over [0, dim)^k (last index fastest).
/// Returns false after the last tuple.
bool next_index(IndexTuple& j, std::size_t dim);

/// Compressed element of S^k(C^n): one complex value per exponent class.
/// Absent keys are zero; exact zeros are never stored.
class SymmetricTensor {
 public:
  using CoeffMap = std::map<ExponentVector, Complex>;

  SymmetricTensor(unsigned order, std::size_t dim);
  SymmetricTensor(unsigned order, std::size_t dim, CoeffMap coeffs);

  [[nodiscard]] unsigned order() const { return order_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const CoeffMap& coeffs() const { return coeffs_; }
  [[nodiscard]] Complex coeff(const ExponentVector& p) const;

  /// Coefficients for every exponent in graded-lex order, zeros included.
  [[nodiscard]] ComplexVector coefficient_vector() const;

  SymmetricTensor& operator+=(const SymmetricTensor& other);
  SymmetricTensor& operator-=(const SymmetricTensor& other);
  SymmetricTensor& operator*=(Complex scale);

  friend SymmetricTensor operator+(SymmetricTensor a, const SymmetricTensor& b) { return a += b; }
  friend SymmetricTensor operator-(SymmetricTensor a, const SymmetricTensor& b) { return a -= b; }
  friend SymmetricTensor operator*(Complex s, SymmetricTensor a) { return a *= s; }
  friend bool operator==(const SymmetricTensor&, const SymmetricTensor&) = default;

 private:
  void check_key(const ExponentVector& p) const;
  void check_same_shape(const SymmetricTensor& other) const;

  unsigned order_;
  std::size_t dim_;
  CoeffMap coeffs_;
};

/// Largest deviation of an entry from its sorted-index representative.
struct SymmetryDefect {
  double max_deviation = 0.0;
  IndexTuple worst;      ///< offending index tuple
  IndexTuple canonical;  ///< its sorted representative
};

[[nodiscard]] SymmetryDefect symmetry_defect(const DenseTensor& a);

/// True iff every entry matches its canonical representative within
/// tol * (1 + max|a|).
[[nodiscard]] bool is_symmetric(const DenseTensor& a, double tol = kDefaultSymmetryTol);

/// Average over all k! index permutations, computed by class averaging.
[[nodiscard]] DenseTensor symmetrize(const DenseTensor& a);

/// Throws SymmetryError (naming the worst index pair) when `a` is not symmetric.
[[nodiscard]] SymmetricTensor compress(const DenseTensor& a, double tol = kDefaultSymmetryTol);

/// Throws CapacityError when n^k exceeds `max_entries`.
[[nodiscard]] DenseTensor decompress(const SymmetricTensor& a,
                                     std::uint64_t max_entries = kDefaultMaxDenseEntries);

/// v^{⊗k}: coefficient at p is prod v_i^{p_i}.
[[nodiscard]] SymmetricTensor outer_power(std::span<const Complex> v, unsigned order);

/// c_{i2..ik j2..jl} = sum_a a_{a i2..ik} b_{a j2..jl}.
[[nodiscard]] DenseTensor contract_mode1(const DenseTensor& a, const DenseTensor& b);

/// Contract `v` against the first index of `a` (order drops by one).
[[nodiscard]] DenseTensor contract_vector(std::span<const Complex> v, const DenseTensor& a);

/// a'_{p q ...} = sum l_{p i} m_{q j} ... a_{i j ...}, applied mode by mode.
/// All maps must share the same row count so the result stays cubical.
[[nodiscard]] DenseTensor multilinear_transform(const DenseTensor& a, std::span<const LinearMap> maps);

/// (L, ..., L) applied to a symmetric tensor, staying in compressed form.
[[nodiscard]] SymmetricTensor congruence_transform(const SymmetricTensor& a, const LinearMap& map);

/// Numerical rank by column-pivoted QR with threshold tol * (largest column norm).
[[nodiscard]] Eigen::Index numerical_rank(const Eigen::MatrixXcd& m, double tol = kDefaultRankTol);

/// Rank of the s x C(n+k-1,k) matrix of sqrt(multinomial)-scaled powers v_i^{⊗k}.
[[nodiscard]] Eigen::Index power_span_rank(std::span<const ComplexVector> vectors, unsigned order,
                                           double tol = kDefaultRankTol);

/// n x n^{k-1} unfolding along the first index.
[[nodiscard]] Eigen::MatrixXcd mode1_flattening(const DenseTensor& a);

[[nodiscard]] double frobenius_norm(const SymmetricTensor& a);
[[nodiscard]] double frobenius_distance(const SymmetricTensor& a, const SymmetricTensor& b);
[[nodiscard]] double frobenius_distance(const DenseTensor& a, const DenseTensor& b);

}  // namespace symtensor
