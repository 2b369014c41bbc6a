#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "drazin/field.hpp"
#include "drazin/linalg.hpp"
#include "drazin/matrix.hpp"

namespace testing {

using drazin::FieldDescriptor;
using drazin::Matrix;
using drazin::Rational;
using drazin::Residue;
using QMat = Matrix<Rational>;
using PMat = Matrix<Residue>;

inline const FieldDescriptor kQ = FieldDescriptor::rationals();

inline FieldDescriptor fp(std::uint64_t p) { return FieldDescriptor::prime_field(p); }

inline QMat q(std::initializer_list<std::initializer_list<long long>> rows) {
  return QMat::from_integers(rows, kQ);
}

inline PMat pm(std::initializer_list<std::initializer_list<long long>> rows, std::uint64_t p) {
  return PMat::from_integers(rows, fp(p));
}

inline Rational rat(long n, long d) { return Rational(mpz_class(n), mpz_class(d)); }

/// Entries uniform in [lo, hi], each zeroed with probability `zero_density`.
/// Mixing densities produces the singular and nilpotent cases that uniform
/// sampling rarely hits.
template <class S>
Matrix<S> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, const FieldDescriptor& field,
                        long long lo, long long hi, double zero_density) {
  std::uniform_int_distribution<long long> entry(lo, hi);
  std::bernoulli_distribution zero(zero_density);
  Matrix<S> m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = S::from_integer(zero(rng) ? 0 : entry(rng), field);
  return m;
}

template <class S>
Matrix<S> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, const FieldDescriptor& field) {
  std::uniform_real_distribution<double> density(0.0, 0.7);
  if (field.is_rational()) return random_matrix<S>(rng, rows, cols, field, -5, 5, density(rng));
  return random_matrix<S>(rng, rows, cols, field, 0, field.modulus() - 1, density(rng));
}

/// Random invertible matrix, rejection-sampled.
template <class S>
Matrix<S> random_invertible(std::mt19937_64& rng, std::size_t n, const FieldDescriptor& field) {
  for (;;) {
    auto m = field.is_rational() ? random_matrix<S>(rng, n, n, field, -3, 3, 0.2)
                                 : random_matrix<S>(rng, n, n, field, 0, field.modulus() - 1, 0.0);
    if (drazin::rank(m) == n) return m;
  }
}

/// Determinant by cofactor expansion; shares no code with the elimination.
template <class S>
S cofactor_det(const Matrix<S>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return S::one(m.field());
  if (n == 1) return m(0, 0);
  S total = S::zero(m.field());
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<S> minor(n - 1, n - 1, m.field());
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    S term = m(0, j) * cofactor_det(minor);
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// rank over F_p from the kernel size: |ker| = p^(cols - rank).
inline std::size_t rank_by_kernel_count(const PMat& m) {
  const std::uint64_t p = m.field().modulus();
  const std::size_t n = m.cols();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::uint64_t kernel = 0;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::uint64_t> v(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = c % p;
      c /= p;
    }
    bool zero = true;
    for (std::size_t r = 0; r < m.rows() && zero; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i) acc = (acc + m(r, i).value() * v[i]) % p;
      zero = acc == 0;
    }
    if (zero) ++kernel;
  }
  std::size_t nullity = 0;
  while (kernel > 1) {
    kernel /= p;
    ++nullity;
  }
  return n - nullity;
}

/// Rank-sequence index computed independently of the library: least k with
/// rank(x^k) == rank(x^{k+1}), using kernel counting.
inline std::size_t index_by_kernel_count(const PMat& x) {
  PMat power = PMat::identity(x.rows(), x.field());
  for (std::size_t k = 0;; ++k) {
    PMat next = power * x;
    if (rank_by_kernel_count(power) == rank_by_kernel_count(next)) return k;
    power = next;
  }
}

/// Every single-entry perturbation of m by `delta`.
template <class S>
std::vector<Matrix<S>> single_entry_perturbations(const Matrix<S>& m, const S& delta) {
  std::vector<Matrix<S>> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      auto copy = m;
      copy(i, j) = copy(i, j) + delta;
      out.push_back(std::move(copy));
    }
  return out;
}

}  // namespace testing
