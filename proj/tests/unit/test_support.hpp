#pragma once

// Shared generators and brute-force oracles for the test suites. Oracles
// here deliberately avoid the library's own code paths.

#include <algorithm>
#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "symtensor/tensor.hpp"

namespace symtensor::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng());
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Complex random_complex() { return {uniform(), uniform()}; }

inline ComplexVector random_vector(std::size_t n) {
  ComplexVector v(n);
  for (auto& c : v) c = random_complex();
  return v;
}

inline DenseTensor random_dense(unsigned order, std::size_t dim) {
  DenseTensor a(order, dim);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = random_complex();
  return a;
}

inline LinearMap random_map(std::size_t rows, std::size_t cols) {
  LinearMap m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = random_complex();
  }
  return m;
}

/// All index tuples of [0,n)^k in row-major order, by direct recursion.
inline std::vector<std::vector<std::size_t>> all_tuples(unsigned k, std::size_t n) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (unsigned m = 0; m < k; ++m) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& t : out) {
      for (std::size_t i = 0; i < n; ++i) {
        auto u = t;
        u.push_back(i);
        next.push_back(std::move(u));
      }
    }
    out = std::move(next);
  }
  return out;
}

inline std::size_t row_major(const std::vector<std::size_t>& j, std::size_t n) {
  std::size_t off = 0;
  for (auto i : j) off = off * n + i;
  return off;
}

/// Symmetrization by explicit sum over all k! permutations of positions.
inline std::vector<Complex> brute_symmetrize(const DenseTensor& a) {
  const unsigned k = a.order();
  const std::size_t n = a.dim();
  std::vector<Complex> out(a.size());
  std::vector<std::size_t> perm(k);
  for (const auto& j : all_tuples(k, n)) {
    std::iota(perm.begin(), perm.end(), 0);
    Complex sum{};
    std::size_t count = 0;
    do {
      std::vector<std::size_t> permuted(k);
      for (unsigned m = 0; m < k; ++m) permuted[m] = j[perm[m]];
      sum += a[row_major(permuted, n)];
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    out[row_major(j, n)] = sum / static_cast<double>(count);
  }
  return out;
}

/// Dense v^{⊗k} by explicit products over index tuples.
inline std::vector<Complex> brute_outer_power(const ComplexVector& v, unsigned k) {
  std::vector<Complex> out;
  for (const auto& j : all_tuples(k, v.size())) {
    Complex p{1.0, 0.0};
    for (auto i : j) p *= v[i];
    out.push_back(p);
  }
  return out;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace symtensor::testing
