#pragma once

#include <optional>
#include <vector>

#include "symtensor/tensor.hpp"

namespace symtensor {

enum class Field { Real, Complex };

struct Term {
  Complex weight;
  ComplexVector vector;
};

/// A = sum_i weight_i * vector_i^{⊗k}.
///
/// Vectors are normalized on construction so their first nonzero component
/// is 1; the scale moves into the weight as c^k. A Real field tag requires
/// every weight and vector entry to have |imag| <= 1e-12.
class SymmetricDecomposition {
 public:
  SymmetricDecomposition(unsigned order, std::size_t dim, Field field, std::vector<Term> terms);

  [[nodiscard]] unsigned order() const { return order_; }
  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] Field field() const { return field_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t rank() const { return terms_.size(); }

  /// Sorts terms by (re, im) of the second vector component, ties by weight.
  void sort_terms();

 private:
  unsigned order_;
  std::size_t dim_;
  Field field_;
  std::vector<Term> terms_;
};

struct VerifyReport {
  double residual = 0.0;
  bool ok = false;
  std::size_t stated_rank = 0;
};

[[nodiscard]] SymmetricTensor reconstruct(const SymmetricDecomposition& d);

/// ok iff frobenius_distance(reconstruct(d), a) <= tol * (1 + ||a||).
[[nodiscard]] VerifyReport verify(const SymmetricDecomposition& d, const SymmetricTensor& a, double tol);

/// The tensor of the binary quantic z1 z2^{k-1} (a_{(1,k-1)} = 1/k).
[[nodiscard]] SymmetricTensor monomial_rank_k_tensor(unsigned order);

/// k-term decomposition of z1 z2^{k-1} with directions (1, beta_i), beta_i
/// the k-th roots of unity, weights beta_i / k^2.
[[nodiscard]] SymmetricDecomposition decompose_monomial_rank_k(unsigned order);

// 2x2x2 matrix pencil ---------------------------------------------------------

inline constexpr double kPencilDegeneracyTol = 1e-12;

/// det(A0 - mu A1) = q2 mu^2 + q1 mu + q0.
struct PencilQuadratic {
  Complex q2, q1, q0;

  [[nodiscard]] Complex discriminant() const { return q1 * q1 - 4.0 * q2 * q0; }
  /// max(|q2|, |q1|, |q0|).
  [[nodiscard]] double scale() const;
};

[[nodiscard]] PencilQuadratic pencil_quadratic(const Eigen::Matrix2cd& a0, const Eigen::Matrix2cd& a1);

/// Slices A0 = a_{1jk}, A1 = a_{2jk} of an order-3, dimension-2 tensor.
[[nodiscard]] std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> pencil_slices(const SymmetricTensor& a);

enum class PencilClass { Rank2, RealRank3 };

struct PencilResult {
  PencilClass classification;
  SymmetricDecomposition decomposition;
};

/// Decomposes a symmetric 2x2x2 tensor through the roots of det(A0 - mu A1).
/// Over C, or over R with two real roots, the result has 2 terms. Over R with
/// complex-conjugate roots the result is RealRank3 with a 3-term real
/// decomposition. Throws DegeneratePencilError on double roots, a vanishing
/// pencil or the zero tensor.
[[nodiscard]] PencilResult decompose_sym222_pencil(const SymmetricTensor& a, Field field);

// Border-rank sequences -----------------------------------------------------------

enum class BorderKind {
  Rank2ToK,    ///< (1/eps)[(x + eps y)^{⊗k} - x^{⊗k}]
  Rank2To3,    ///< eps^2 (x + y/eps)^{⊗3} + eps^2 (x - y/eps)^{⊗3}
  TangentSum,  ///< (1/eps)[(x + eps y)^{⊗3} - x^{⊗3} + (z + eps x)^{⊗3} - z^{⊗3}]
};

struct BorderSequenceSpec {
  BorderKind kind;
  unsigned order = 3;
  std::vector<ComplexVector> base;  ///< {x, y} or {x, y, z}
};

/// Coordinate vectors e1, e2 (and e3 for TangentSum).
[[nodiscard]] BorderSequenceSpec default_border_spec(BorderKind kind, unsigned order = 3);

struct BorderSequence {
  SymmetricTensor approximant;  ///< A_eps, reconstructed from the witness
  SymmetricTensor limit;        ///< closed-form A_0
  SymmetricDecomposition witness;
  /// Higher-rank decomposition of the limit, where one is known in closed form.
  std::optional<SymmetricDecomposition> limit_decomposition;
};

[[nodiscard]] BorderSequence border_sequence(const BorderSequenceSpec& spec, double epsilon);

}  // namespace symtensor
