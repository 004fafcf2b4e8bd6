#include "symtensor/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <tuple>

#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

constexpr double kRealTol = 1e-12;
constexpr double kPencilVerifyTol = 1e-9;

Complex ipow(Complex v, unsigned e) {
  Complex out{1.0, 0.0};
  for (unsigned i = 0; i < e; ++i) out *= v;
  return out;
}

bool is_real_vector(std::span<const Complex> v) {
  return std::all_of(v.begin(), v.end(), [](const Complex& c) { return std::abs(c.imag()) <= kRealTol; });
}

ComplexVector axpy(Complex alpha, const ComplexVector& x, const ComplexVector& y) {
  ComplexVector out(y);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += alpha * x[i];
  return out;
}

// a_p = sum_i p_i d_i base^{p - e_i}: the tensor k * Sym(base^{⊗(k-1)} ⊗ direction).
SymmetricTensor tangent_tensor(const ComplexVector& base, const ComplexVector& direction, unsigned order) {
  SymmetricTensor::CoeffMap coeffs;
  const std::size_t n = base.size();
  for (auto& p : enumerate_exponents(order, static_cast<unsigned>(n))) {
    Complex sum{};
    for (std::size_t i = 0; i < n; ++i) {
      if (p[i] == 0 || direction[i] == Complex{}) continue;
      Complex term = static_cast<double>(p[i]) * direction[i];
      for (std::size_t m = 0; m < n; ++m) term *= ipow(base[m], p[m] - (m == i ? 1 : 0));
      sum += term;
    }
    coeffs.emplace(std::move(p), sum);
  }
  return {order, n, std::move(coeffs)};
}

Field field_of(const std::vector<ComplexVector>& vectors) {
  return std::all_of(vectors.begin(), vectors.end(), [](const ComplexVector& v) { return is_real_vector(v); })
             ? Field::Real
             : Field::Complex;
}

Eigen::MatrixXcd stack_columns(const std::vector<ComplexVector>& vectors) {
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(vectors.front().size()), static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    for (std::size_t r = 0; r < vectors[c].size(); ++r) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = vectors[c][r];
    }
  }
  return m;
}

// Roots [s:t] of q2 s^2 + q1 s t + q0 t^2, as direction vectors (s, t).
std::pair<ComplexVector, ComplexVector> pencil_directions(const PencilQuadratic& q, Complex disc) {
  const Complex sq = std::sqrt(disc);
  // pick the sign that avoids cancellation in q1 + sq
  const Complex w = -0.5 * (std::abs(q.q1 + sq) >= std::abs(q.q1 - sq) ? q.q1 + sq : q.q1 - sq);
  if (std::abs(q.q2) >= std::abs(q.q0)) {
    if (q.q2 == Complex{}) return {{1.0, 0.0}, {0.0, 1.0}};  // q2 = q0 = 0: roots 0 and infinity
    return {{w / q.q2, 1.0}, {q.q0 / w, 1.0}};
  }
  // solve in nu = t/s: q0 nu^2 + q1 nu + q2 = 0
  return {{1.0, w / q.q0}, {1.0, q.q2 / w}};
}

// Weights for fixed directions by least squares on the class coefficients.
std::vector<Complex> fit_weights(const SymmetricTensor& a, const std::vector<ComplexVector>& dirs) {
  const auto exps = enumerate_exponents(a.order(), static_cast<unsigned>(a.dim()));
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(exps.size()), static_cast<Eigen::Index>(dirs.size()));
  Eigen::VectorXcd rhs(static_cast<Eigen::Index>(exps.size()));
  for (std::size_t r = 0; r < exps.size(); ++r) {
    rhs(static_cast<Eigen::Index>(r)) = a.coeff(exps[r]);
    for (std::size_t c = 0; c < dirs.size(); ++c) {
      Complex v{1.0, 0.0};
      for (std::size_t i = 0; i < a.dim(); ++i) v *= ipow(dirs[c][i], exps[r][i]);
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  const Eigen::VectorXcd w = m.colPivHouseholderQr().solve(rhs);
  return {w.data(), w.data() + w.size()};
}

SymmetricDecomposition checked(SymmetricDecomposition d, const SymmetricTensor& a, const char* what) {
  const auto report = verify(d, a, kPencilVerifyTol);
  if (!report.ok) {
    throw DegeneratePencilError(std::string(what) + ": decomposition residual " + std::to_string(report.residual) +
                                " exceeds tolerance (ill-conditioned pencil)");
  }
  d.sort_terms();
  return d;
}

// Rotated coefficients (a, b, c, d) of a real binary cubic under x -> R(theta) x.
SymmetricTensor rotate(const SymmetricTensor& a, double theta) {
  LinearMap r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return congruence_transform(a, r);
}

double template_mismatch(const SymmetricTensor& a, double theta) {
  const auto rot = rotate(a, theta);
  return rot.coeff(ExponentVector({2, 1})).real() - rot.coeff(ExponentVector({0, 3})).real();
}

// Real 3-term witness for a real binary cubic with complex pencil roots.
// Nodes (1,1), (1,-1), (1,0) span exactly the cubics with a_{21} = a_{03};
// rotate until that holds, solve for weights, rotate back.
SymmetricDecomposition real_rank3_witness(const SymmetricTensor& a) {
  double lo = 0.0;
  double f_lo = template_mismatch(a, lo);
  double theta = 0.0;
  const double scale = frobenius_norm(a);
  if (std::abs(f_lo) > 1e-15 * scale) {
    // f(theta + pi) = -f(theta), so a sign change exists on [0, pi]
    constexpr int kSteps = 64;
    double hi = lo;
    double f_hi = f_lo;
    for (int s = 1; s <= kSteps; ++s) {
      hi = std::numbers::pi * s / kSteps;
      f_hi = template_mismatch(a, hi);
      if ((f_lo < 0) != (f_hi < 0) || f_hi == 0.0) break;
      lo = hi;
      f_lo = f_hi;
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double f_mid = template_mismatch(a, mid);
      if ((f_mid < 0) == (f_lo < 0)) {
        lo = mid;
        f_lo = f_mid;
      } else {
        hi = mid;
      }
    }
    theta = 0.5 * (lo + hi);
  }

  const auto rot = rotate(a, theta);
  // rows: a_{30}, a_{21}, a_{12} of w1 (1,1)^3 + w2 (1,-1)^3 + w3 (1,0)^3
  Eigen::Matrix3d m;
  m << 1, 1, 1,  //
      1, -1, 0,  //
      1, 1, 0;
  const Eigen::Vector3d rhs(rot.coeff(ExponentVector({3, 0})).real(), rot.coeff(ExponentVector({2, 1})).real(),
                            rot.coeff(ExponentVector({1, 2})).real());
  const Eigen::Vector3d w = m.partialPivLu().solve(rhs);

  const double c = std::cos(theta);
  const double s = std::sin(theta);
  // u -> R^T u undoes the rotation
  auto back = [&](double u0, double u1) { return ComplexVector{c * u0 + s * u1, -s * u0 + c * u1}; };
  std::vector<Term> terms{{w(0), back(1, 1)}, {w(1), back(1, -1)}, {w(2), back(1, 0)}};
  return {3, 2, Field::Real, std::move(terms)};
}

}  // namespace

// SymmetricDecomposition --------------------------------------------------------------

SymmetricDecomposition::SymmetricDecomposition(unsigned order, std::size_t dim, Field field, std::vector<Term> terms)
    : order_(order), dim_(dim), field_(field), terms_(std::move(terms)) {
  if (dim_ == 0) throw ValidationError("decomposition: dimension must be at least 1");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    auto& t = terms_[i];
    if (t.vector.size() != dim_) {
      throw ValidationError("decomposition: term " + std::to_string(i) + " has vector length " +
                            std::to_string(t.vector.size()) + ", expected " + std::to_string(dim_));
    }
    double vmax = 0.0;
    for (const auto& c : t.vector) vmax = std::max(vmax, std::abs(c));
    if (vmax == 0.0) throw ValidationError("decomposition: term " + std::to_string(i) + " has a zero vector");
    auto lead = std::find_if(t.vector.begin(), t.vector.end(),
                             [&](const Complex& c) { return std::abs(c) > 1e-14 * vmax; });
    const Complex scale = *lead;
    for (auto& c : t.vector) c /= scale;
    *lead = 1.0;
    t.weight *= ipow(scale, order_);

    if (field_ == Field::Real) {
      if (std::abs(t.weight.imag()) > kRealTol || !is_real_vector(t.vector)) {
        throw ValidationError("decomposition: term " + std::to_string(i) + " is not real but field is R");
      }
      t.weight.imag(0.0);
      for (auto& c : t.vector) c.imag(0.0);
    }
  }
}

void SymmetricDecomposition::sort_terms() {
  const std::size_t key = dim_ > 1 ? 1 : 0;
  std::stable_sort(terms_.begin(), terms_.end(), [key](const Term& a, const Term& b) {
    const Complex& x = a.vector[key];
    const Complex& y = b.vector[key];
    return std::make_tuple(x.real(), x.imag(), a.weight.real(), a.weight.imag()) <
           std::make_tuple(y.real(), y.imag(), b.weight.real(), b.weight.imag());
  });
}

SymmetricTensor reconstruct(const SymmetricDecomposition& d) {
  SymmetricTensor out(d.order(), d.dim());
  for (const auto& t : d.terms()) out += t.weight * outer_power(t.vector, d.order());
  return out;
}

VerifyReport verify(const SymmetricDecomposition& d, const SymmetricTensor& a, double tol) {
  if (d.order() != a.order() || d.dim() != a.dim()) {
    throw ValidationError("verify: decomposition is order " + std::to_string(d.order()) + ", dimension " +
                          std::to_string(d.dim()) + " but tensor is order " + std::to_string(a.order()) +
                          ", dimension " + std::to_string(a.dim()));
  }
  VerifyReport r;
  r.residual = frobenius_distance(reconstruct(d), a);
  r.ok = r.residual <= tol * (1.0 + frobenius_norm(a));
  r.stated_rank = d.rank();
  return r;
}

SymmetricTensor monomial_rank_k_tensor(unsigned order) {
  if (order < 1) throw ValidationError("monomial tensor needs order >= 1");
  return {order, 2, {{ExponentVector({1, order - 1}), Complex{1.0 / order, 0.0}}}};
}

SymmetricDecomposition decompose_monomial_rank_k(unsigned order) {
  if (order < 2) throw ValidationError("decompose_monomial_rank_k: order must be at least 2");
  // sum_i lambda_i beta_i^t = delta_{t,k-1} / k with beta_i = omega^i gives
  // lambda_i = beta_i / k^2 by the inverse DFT.
  const double k = order;
  std::vector<Term> terms;
  for (unsigned i = 0; i < order; ++i) {
    const Complex beta = std::polar(1.0, 2.0 * std::numbers::pi * i / k);
    terms.push_back({beta / (k * k), {1.0, beta}});
  }
  SymmetricDecomposition d(order, 2, Field::Complex, std::move(terms));
  d.sort_terms();
  return d;
}

// Pencil ------------------------------------------------------------------------------

double PencilQuadratic::scale() const { return std::max({std::abs(q2), std::abs(q1), std::abs(q0)}); }

PencilQuadratic pencil_quadratic(const Eigen::Matrix2cd& a0, const Eigen::Matrix2cd& a1) {
  return {a1.determinant(),
          -(a0(0, 0) * a1(1, 1) + a0(1, 1) * a1(0, 0) - a0(0, 1) * a1(1, 0) - a0(1, 0) * a1(0, 1)),
          a0.determinant()};
}

std::pair<Eigen::Matrix2cd, Eigen::Matrix2cd> pencil_slices(const SymmetricTensor& a) {
  if (a.order() != 3 || a.dim() != 2) throw ValidationError("pencil: tensor must be order 3, dimension 2");
  const Complex c30 = a.coeff(ExponentVector({3, 0}));
  const Complex c21 = a.coeff(ExponentVector({2, 1}));
  const Complex c12 = a.coeff(ExponentVector({1, 2}));
  const Complex c03 = a.coeff(ExponentVector({0, 3}));
  Eigen::Matrix2cd a0;
  Eigen::Matrix2cd a1;
  a0 << c30, c21, c21, c12;
  a1 << c21, c12, c12, c03;
  return {a0, a1};
}

PencilResult decompose_sym222_pencil(const SymmetricTensor& a, Field field) {
  const auto [a0, a1] = pencil_slices(a);
  if (a.coeffs().empty()) throw DegeneratePencilError("degenerate pencil: zero tensor");
  if (field == Field::Real) {
    for (const auto& [p, v] : a.coeffs()) {
      if (std::abs(v.imag()) > kRealTol) throw ValidationError("pencil: real field requested for a complex tensor");
    }
  }

  const auto q = pencil_quadratic(a0, a1);
  const double scale = q.scale();
  if (scale == 0.0) throw DegeneratePencilError("degenerate pencil: det(A0 - mu A1) vanishes identically");
  Complex disc = q.discriminant();
  if (std::abs(disc) < kPencilDegeneracyTol * scale * scale) {
    throw DegeneratePencilError("degenerate pencil: double root");
  }

  if (field == Field::Real) {
    disc = disc.real();
    if (disc.real() < 0.0) {
      return {PencilClass::RealRank3, checked(real_rank3_witness(a), a, "real rank-3 witness")};
    }
  }

  auto [u, v] = pencil_directions(q, disc);
  if (field == Field::Real) {
    for (auto* w : {&u, &v}) {
      for (auto& c : *w) c = c.real();
    }
  }
  std::vector<ComplexVector> dirs{u, v};
  const auto weights = fit_weights(a, dirs);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    terms.push_back({field == Field::Real ? Complex{weights[i].real(), 0.0} : weights[i], dirs[i]});
  }
  return {PencilClass::Rank2, checked(SymmetricDecomposition(3, 2, field, std::move(terms)), a, "pencil")};
}

// Border sequences -------------------------------------------------------------------

BorderSequenceSpec default_border_spec(BorderKind kind, unsigned order) {
  switch (kind) {
    case BorderKind::Rank2ToK:
      return {kind, order, {{1.0, 0.0}, {0.0, 1.0}}};
    case BorderKind::Rank2To3:
      return {kind, 3, {{1.0, 0.0}, {0.0, 1.0}}};
    case BorderKind::TangentSum:
      return {kind, 3, {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
  }
  throw ValidationError("unknown border kind");
}

BorderSequence border_sequence(const BorderSequenceSpec& spec, double epsilon) {
  if (!(epsilon > 0.0)) throw ValidationError("border_sequence: epsilon must be positive");
  const std::size_t needed = spec.kind == BorderKind::TangentSum ? 3 : 2;
  if (spec.base.size() != needed) {
    throw ValidationError("border_sequence: expected " + std::to_string(needed) + " base vectors");
  }
  const std::size_t n = spec.base.front().size();
  for (const auto& v : spec.base) {
    if (v.size() != n || n == 0) throw ValidationError("border_sequence: base vectors differ in length");
  }
  if (numerical_rank(stack_columns(spec.base)) != static_cast<Eigen::Index>(needed)) {
    throw ValidationError("border_sequence: base vectors must be linearly independent");
  }
  const Field field = field_of(spec.base);
  const auto& x = spec.base[0];
  const auto& y = spec.base[1];

  switch (spec.kind) {
    case BorderKind::Rank2ToK: {
      const unsigned k = spec.order;
      if (k < 3) throw ValidationError("border_sequence: rank2_to_k needs order >= 3");
      SymmetricDecomposition witness(k, n, field, {{1.0 / epsilon, axpy(epsilon, y, x)}, {-1.0 / epsilon, x}});
      // limit k x^{k-1} y in the (x, y) plane: swap the monomial construction's
      // coordinates and scale by k
      std::vector<Term> limit_terms;
      const auto monomial = decompose_monomial_rank_k(k);
      for (const auto& t : monomial.terms()) {
        ComplexVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = t.vector[1] * x[i] + t.vector[0] * y[i];
        limit_terms.push_back({static_cast<double>(k) * t.weight, std::move(v)});
      }
      return {reconstruct(witness), tangent_tensor(x, y, k), witness,
              SymmetricDecomposition(k, n, Field::Complex, std::move(limit_terms))};
    }
    case BorderKind::Rank2To3: {
      const double e2 = epsilon * epsilon;
      SymmetricDecomposition witness(3, n, field,
                                     {{e2, axpy(1.0 / epsilon, y, x)}, {e2, axpy(-1.0 / epsilon, y, x)}});
      // A0 = 2 (x⊗y⊗y + y⊗x⊗y + y⊗y⊗x) = (x+y)^3 + (x-y)^3 - 2 x^3
      SymmetricTensor limit = tangent_tensor(y, x, 3);
      limit *= 2.0;
      SymmetricDecomposition limit_decomp(3, n, field,
                                          {{1.0, axpy(1.0, y, x)}, {1.0, axpy(-1.0, y, x)}, {-2.0, x}});
      return {reconstruct(witness), std::move(limit), witness, std::move(limit_decomp)};
    }
    case BorderKind::TangentSum: {
      const auto& z = spec.base[2];
      SymmetricDecomposition witness(3, n, field,
                                     {{1.0 / epsilon, axpy(epsilon, y, x)},
                                      {-1.0 / epsilon, x},
                                      {1.0 / epsilon, axpy(epsilon, x, z)},
                                      {-1.0 / epsilon, z}});
      return {reconstruct(witness), tangent_tensor(x, y, 3) + tangent_tensor(z, x, 3), witness, std::nullopt};
    }
  }
  throw ValidationError("unknown border kind");
}

}  // namespace symtensor
