#include "symtensor/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "symtensor/errors.hpp"

namespace symtensor {

namespace {

std::string format_tuple(const IndexTuple& j) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < j.size(); ++i) os << (i ? "," : "") << j[i];
  os << ')';
  return os.str();
}

std::size_t entry_count(unsigned order, std::size_t dim) {
  return static_cast<std::size_t>(checked_power(dim, order));
}

// Offset of the sorted representative of j.
std::size_t canonical_offset(const DenseTensor& a, const IndexTuple& j, IndexTuple& scratch) {
  scratch = j;
  std::sort(scratch.begin(), scratch.end());
  return a.offset(scratch);
}

Complex monomial(std::span<const Complex> v, const ExponentVector& p) {
  Complex out{1.0, 0.0};
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (unsigned e = 0; e < p[i]; ++e) out *= v[i];
  }
  return out;
}

// Apply `map` along mode `mode` of a row-major buffer with the given extents.
std::vector<Complex> apply_mode(const std::vector<Complex>& in, std::vector<std::size_t>& extents,
                                std::size_t mode, const LinearMap& map) {
  std::size_t pre = 1;
  for (std::size_t m = 0; m < mode; ++m) pre *= extents[m];
  std::size_t post = 1;
  for (std::size_t m = mode + 1; m < extents.size(); ++m) post *= extents[m];
  const auto cols = static_cast<std::size_t>(map.cols());
  const auto rows = static_cast<std::size_t>(map.rows());

  std::vector<Complex> out(pre * rows * post, Complex{});
  for (std::size_t p = 0; p < pre; ++p) {
    for (std::size_t i = 0; i < rows; ++i) {
      Complex* dst = out.data() + (p * rows + i) * post;
      for (std::size_t j = 0; j < cols; ++j) {
        const Complex l = map(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        if (l == Complex{}) continue;
        const Complex* src = in.data() + (p * cols + j) * post;
        for (std::size_t q = 0; q < post; ++q) dst[q] += l * src[q];
      }
    }
  }
  extents[mode] = rows;
  return out;
}

}  // namespace

// DenseTensor ---------------------------------------------------------------

DenseTensor::DenseTensor(unsigned order, std::size_t dim)
    : DenseTensor(order, dim, std::vector<Complex>(entry_count(order, dim))) {}

DenseTensor::DenseTensor(unsigned order, std::size_t dim, std::vector<Complex> entries)
    : order_(order), dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw ValidationError("dense tensor: dimension must be at least 1");
  const std::size_t expected = entry_count(order_, dim_);
  if (entries_.size() != expected) {
    throw ValidationError("dense tensor: expected " + std::to_string(expected) + " entries for order " +
                          std::to_string(order_) + ", dimension " + std::to_string(dim_) + ", got " +
                          std::to_string(entries_.size()));
  }
}

std::size_t DenseTensor::offset(std::span<const std::size_t> j) const {
  if (j.size() != order_) {
    throw ValidationError("index tuple has length " + std::to_string(j.size()) + ", tensor order is " +
                          std::to_string(order_));
  }
  std::size_t off = 0;
  for (std::size_t idx : j) {
    if (idx >= dim_) throw ValidationError("index " + std::to_string(idx) + " out of range");
    off = off * dim_ + idx;
  }
  return off;
}

double DenseTensor::max_abs() const {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

bool next_index(IndexTuple& j, std::size_t dim) {
  for (std::size_t m = j.size(); m-- > 0;) {
    if (++j[m] < dim) return true;
    j[m] = 0;
  }
  return false;
}

// SymmetricTensor -------------------------------------------------------------

SymmetricTensor::SymmetricTensor(unsigned order, std::size_t dim) : order_(order), dim_(dim) {
  if (dim_ == 0) throw ValidationError("symmetric tensor: dimension must be at least 1");
}

SymmetricTensor::SymmetricTensor(unsigned order, std::size_t dim, CoeffMap coeffs)
    : SymmetricTensor(order, dim) {
  for (auto& [p, v] : coeffs) {
    check_key(p);
    if (v != Complex{}) coeffs_.emplace(p, v);
  }
}

void SymmetricTensor::check_key(const ExponentVector& p) const {
  if (p.size() != dim_ || p.degree() != order_) {
    throw ValidationError("exponent vector of length " + std::to_string(p.size()) + " and degree " +
                          std::to_string(p.degree()) + " does not fit order " + std::to_string(order_) +
                          ", dimension " + std::to_string(dim_));
  }
}

void SymmetricTensor::check_same_shape(const SymmetricTensor& other) const {
  if (other.order_ != order_ || other.dim_ != dim_) {
    throw ValidationError("symmetric tensor shape mismatch");
  }
}

Complex SymmetricTensor::coeff(const ExponentVector& p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Complex{} : it->second;
}

ComplexVector SymmetricTensor::coefficient_vector() const {
  ComplexVector out;
  for (const auto& p : enumerate_exponents(order_, static_cast<unsigned>(dim_))) out.push_back(coeff(p));
  return out;
}

SymmetricTensor& SymmetricTensor::operator+=(const SymmetricTensor& other) {
  check_same_shape(other);
  for (const auto& [p, v] : other.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(p, v);
    if (!inserted) {
      it->second += v;
      if (it->second == Complex{}) coeffs_.erase(it);
    }
  }
  return *this;
}

SymmetricTensor& SymmetricTensor::operator-=(const SymmetricTensor& other) {
  SymmetricTensor negated = other;
  negated *= -1.0;
  return *this += negated;
}

SymmetricTensor& SymmetricTensor::operator*=(Complex scale) {
  if (scale == Complex{}) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [p, v] : coeffs_) v *= scale;
  return *this;
}

// Symmetry ---------------------------------------------------------------------

SymmetryDefect symmetry_defect(const DenseTensor& a) {
  SymmetryDefect defect;
  IndexTuple j(a.order(), 0);
  IndexTuple sorted;
  std::size_t off = 0;
  do {
    const std::size_t canon = canonical_offset(a, j, sorted);
    const double dev = std::abs(a[off] - a[canon]);
    if (dev > defect.max_deviation) {
      defect.max_deviation = dev;
      defect.worst = j;
      defect.canonical = sorted;
    }
    ++off;
  } while (next_index(j, a.dim()));
  return defect;
}

bool is_symmetric(const DenseTensor& a, double tol) {
  return symmetry_defect(a).max_deviation <= tol * (1.0 + a.max_abs());
}

DenseTensor symmetrize(const DenseTensor& a) {
  std::vector<Complex> sums(a.size());
  std::vector<std::uint32_t> counts(a.size(), 0);
  std::vector<std::size_t> canon(a.size());

  IndexTuple j(a.order(), 0);
  IndexTuple sorted;
  std::size_t off = 0;
  do {
    canon[off] = canonical_offset(a, j, sorted);
    sums[canon[off]] += a[off];
    ++counts[canon[off]];
    ++off;
  } while (next_index(j, a.dim()));

  std::vector<Complex> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sums[canon[i]] / static_cast<double>(counts[canon[i]]);
  return DenseTensor(a.order(), a.dim(), std::move(out));
}

SymmetricTensor compress(const DenseTensor& a, double tol) {
  const auto defect = symmetry_defect(a);
  if (defect.max_deviation > tol * (1.0 + a.max_abs())) {
    std::ostringstream os;
    os << "tensor is not symmetric: entry " << format_tuple(defect.worst) << " differs from "
       << format_tuple(defect.canonical) << " by " << defect.max_deviation;
    throw SymmetryError(os.str());
  }
  SymmetricTensor::CoeffMap coeffs;
  for (auto& p : enumerate_exponents(a.order(), static_cast<unsigned>(a.dim()))) {
    const Complex v = a.at(exponent_to_index(p));
    if (v != Complex{}) coeffs.emplace(std::move(p), v);
  }
  return {a.order(), a.dim(), std::move(coeffs)};
}

DenseTensor decompress(const SymmetricTensor& a, std::uint64_t max_entries) {
  std::uint64_t count = 0;
  try {
    count = checked_power(a.dim(), a.order());
  } catch (const OverflowError&) {
    throw CapacityError("dense tensor size overflows 64 bits");
  }
  if (count > max_entries) {
    throw CapacityError("dense tensor would need " + std::to_string(count) + " entries (cap " +
                        std::to_string(max_entries) + ")");
  }
  DenseTensor out(a.order(), a.dim());
  if (a.coeffs().empty()) return out;
  IndexTuple j(a.order(), 0);
  std::size_t off = 0;
  do {
    out[off++] = a.coeff(index_to_exponent(j, a.dim()));
  } while (next_index(j, a.dim()));
  return out;
}

SymmetricTensor outer_power(std::span<const Complex> v, unsigned order) {
  if (v.empty()) throw ValidationError("outer_power: empty vector");
  SymmetricTensor::CoeffMap coeffs;
  for (auto& p : enumerate_exponents(order, static_cast<unsigned>(v.size()))) {
    const Complex c = monomial(v, p);
    coeffs.emplace(std::move(p), c);
  }
  return {order, v.size(), std::move(coeffs)};
}

// Contractions ----------------------------------------------------------------

DenseTensor contract_mode1(const DenseTensor& a, const DenseTensor& b) {
  if (a.order() == 0 || b.order() == 0) throw ValidationError("contract_mode1: operands need order >= 1");
  if (a.dim() != b.dim()) {
    throw ValidationError("contract_mode1: first dimensions differ (" + std::to_string(a.dim()) + " vs " +
                          std::to_string(b.dim()) + ")");
  }
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto n = static_cast<Eigen::Index>(a.dim());
  const auto ra = static_cast<Eigen::Index>(a.size()) / n;
  const auto rb = static_cast<Eigen::Index>(b.size()) / n;
  Eigen::Map<const RowMajor> ma(a.entries().data(), n, ra);
  Eigen::Map<const RowMajor> mb(b.entries().data(), n, rb);

  DenseTensor out(a.order() + b.order() - 2, a.dim());
  Eigen::Map<RowMajor> mc(&out[0], ra, rb);
  mc.noalias() = ma.transpose() * mb;
  return out;
}

DenseTensor contract_vector(std::span<const Complex> v, const DenseTensor& a) {
  return contract_mode1(DenseTensor(1, v.size(), {v.begin(), v.end()}), a);
}

DenseTensor multilinear_transform(const DenseTensor& a, std::span<const LinearMap> maps) {
  if (maps.size() != a.order()) {
    throw ValidationError("multilinear_transform: expected " + std::to_string(a.order()) + " maps, got " +
                          std::to_string(maps.size()));
  }
  if (maps.empty()) return a;
  const auto rows = maps.front().rows();
  for (std::size_t m = 0; m < maps.size(); ++m) {
    if (maps[m].rows() <= 0 || maps[m].cols() != static_cast<Eigen::Index>(a.dim())) {
      throw ValidationError("multilinear_transform: map for mode " + std::to_string(m + 1) + " is " +
                            std::to_string(maps[m].rows()) + "x" + std::to_string(maps[m].cols()) +
                            ", needs " + std::to_string(a.dim()) + " columns");
    }
    if (maps[m].rows() != rows) {
      throw ValidationError("multilinear_transform: map for mode " + std::to_string(m + 1) +
                            " has a different row count than mode 1");
    }
  }
  std::vector<std::size_t> extents(a.order(), a.dim());
  std::vector<Complex> buf(a.entries().begin(), a.entries().end());
  for (std::size_t m = 0; m < maps.size(); ++m) buf = apply_mode(buf, extents, m, maps[m]);
  return DenseTensor(a.order(), static_cast<std::size_t>(rows), std::move(buf));
}

SymmetricTensor congruence_transform(const SymmetricTensor& a, const LinearMap& map) {
  std::vector<LinearMap> maps(a.order(), map);
  return compress(symmetrize(multilinear_transform(decompress(a), maps)));
}

// Ranks -------------------------------------------------------------------------

Eigen::Index numerical_rank(const Eigen::MatrixXcd& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(m);
  qr.setThreshold(tol);
  return qr.rank();
}

Eigen::Index power_span_rank(std::span<const ComplexVector> vectors, unsigned order, double tol) {
  if (vectors.empty()) return 0;
  const std::size_t n = vectors.front().size();
  const auto exps = enumerate_exponents(order, static_cast<unsigned>(n));
  Eigen::MatrixXcd rows(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(exps.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw ValidationError("power_span_rank: vectors differ in length");
    for (std::size_t c = 0; c < exps.size(); ++c) {
      rows(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) =
          std::sqrt(static_cast<double>(multinomial(exps[c]))) * monomial(vectors[i], exps[c]);
    }
  }
  return numerical_rank(rows, tol);
}

Eigen::MatrixXcd mode1_flattening(const DenseTensor& a) {
  using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  const auto n = static_cast<Eigen::Index>(a.dim());
  return Eigen::Map<const RowMajor>(a.entries().data(), n, static_cast<Eigen::Index>(a.size()) / n);
}

// Distances -----------------------------------------------------------------------

double frobenius_norm(const SymmetricTensor& a) {
  double sum = 0.0;
  for (const auto& [p, v] : a.coeffs()) sum += static_cast<double>(multinomial(p)) * std::norm(v);
  return std::sqrt(sum);
}

double frobenius_distance(const SymmetricTensor& a, const SymmetricTensor& b) {
  if (a.order() != b.order() || a.dim() != b.dim()) {
    throw ValidationError("frobenius_distance: shape mismatch");
  }
  return frobenius_norm(a - b);
}

double frobenius_distance(const DenseTensor& a, const DenseTensor& b) {
  if (a.order() != b.order() || a.dim() != b.dim()) {
    throw ValidationError("frobenius_distance: shape mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::norm(a[i] - b[i]);
  return std::sqrt(sum);
}

}  // namespace symtensor
