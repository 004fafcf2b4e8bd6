#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "symtensor/tensor.hpp"

namespace symtensor {

/// Homogeneous polynomial of degree k in n variables,
///
///   F(x) = sum_p C(k; p_1..p_n) a_p x^p,
///
/// stored by its multinomial-scaled coefficients a_p. Under this convention
/// a_p is exactly the class entry of the associated symmetric tensor.
class Quantic {
 public:
  using TermMap = std::map<ExponentVector, Complex>;

  Quantic(unsigned degree, std::size_t nvars);
  Quantic(unsigned degree, std::size_t nvars, TermMap terms);

  [[nodiscard]] unsigned degree() const { return degree_; }
  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] Complex coeff(const ExponentVector& p) const;

  /// Raw monomial coefficient C(k; p) a_p.
  [[nodiscard]] Complex monomial_coeff(const ExponentVector& p) const;

  Quantic& operator+=(const Quantic& other);
  Quantic& operator*=(Complex scale);
  friend Quantic operator+(Quantic a, const Quantic& b) { return a += b; }
  friend Quantic operator*(Complex s, Quantic a) { return a *= s; }
  friend bool operator==(const Quantic&, const Quantic&) = default;

 private:
  unsigned degree_;
  std::size_t nvars_;
  TermMap terms_;
};

/// Linear form beta(x) = beta_1 x_1 + ... + beta_n x_n.
struct LinearForm {
  ComplexVector beta;
};

[[nodiscard]] Quantic tensor_to_quantic(const SymmetricTensor& a);
[[nodiscard]] SymmetricTensor quantic_to_tensor(const Quantic& f);

[[nodiscard]] Complex evaluate(const Quantic& f, std::span<const Complex> x);

/// <F, G> = sum_p C(k; p) a_p b_p. Bilinear, symmetric, no conjugation.
[[nodiscard]] Complex apolar_form(const Quantic& f, const Quantic& g);

/// beta(x)^k; its scaled coefficients are beta^p.
[[nodiscard]] Quantic veronese(const LinearForm& form, unsigned degree);

/// The scaled monomial C(k; p) x^p, i.e. the quantic with a_p = 1.
[[nodiscard]] Quantic scaled_monomial(const ExponentVector& p);

/// Renders raw monomial coefficients, e.g. "3*x1*x2^2 - x1^3". Complex
/// coefficients print as "(re+imj)"; 12 significant digits.
[[nodiscard]] std::string to_string(const Quantic& f);

/// Parses the text grammar produced by to_string: terms `c*x<i>^<e>` joined
/// by `+`/`-`, with `*` between factors and explicit `^` exponents.
/// Variables are 1-based. `nvars` of 0 means "highest variable index seen";
/// `degree` is only needed to type the zero polynomial.
/// Throws ValidationError on syntax errors or non-homogeneous input.
[[nodiscard]] Quantic parse_quantic(std::string_view text, std::size_t nvars = 0,
                                    std::optional<unsigned> degree = std::nullopt);

}  // namespace symtensor
