#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "drazin/field.hpp"

namespace drazin {

/// Dense row-major matrix over an exact field.
///
/// Matrices act on column vectors (`M * v`), so the product `A * B` means
/// "apply B, then A". Empty shapes (0x0, 0xn, nx0) are legal and carry
/// their field like any other matrix.
template <ExactScalar S>
class Matrix {
 public:
  using scalar_type = S;

  Matrix(std::size_t rows, std::size_t cols, const FieldDescriptor& field)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols, S::zero(field)) {}

  static Matrix zero(std::size_t rows, std::size_t cols, const FieldDescriptor& field) {
    return Matrix(rows, cols, field);
  }

  static Matrix identity(std::size_t n, const FieldDescriptor& field) {
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S::one(field);
    return m;
  }

  /// Rows must all have the same length; an empty list gives a 0x0 matrix.
  static Matrix from_integers(std::initializer_list<std::initializer_list<long long>> rows,
                              const FieldDescriptor& field) {
    std::vector<std::vector<long long>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_integers(v, field);
  }

  static Matrix from_integers(const std::vector<std::vector<long long>>& rows,
                              const FieldDescriptor& field) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, field);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) raise(Errc::shape_mismatch, "ragged row list");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = S::from_integer(rows[i][j], field);
    }
    return m;
  }

  /// All entries must live in `field`.
  static Matrix from_entries(std::size_t rows, std::size_t cols, std::vector<S> entries,
                             const FieldDescriptor& field) {
    if (entries.size() != rows * cols) raise(Errc::shape_mismatch, "entry count does not match shape");
    for (const auto& e : entries) {
      if (!(e.field() == field)) raise(Errc::field_mismatch, "entry outside " + field.to_string());
    }
    Matrix m(0, 0, field);
    m.rows_ = rows;
    m.cols_ = cols;
    m.data_ = std::move(entries);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldDescriptor& field() const noexcept { return field_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::span<const S> entries() const noexcept { return data_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  bool is_identity() const { return is_square() && *this == identity(rows_, field_); }

  Matrix transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix pow(std::size_t k) const {
    require_square("pow");
    Matrix result = identity(rows_, field_);
    Matrix base = *this;
    while (k > 0) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k > 0) base = base * base;
    }
    return result;
  }

  Matrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_) raise(Errc::shape_mismatch, "block out of range");
    Matrix b(nrows, ncols, field_);
    for (std::size_t i = 0; i < nrows; ++i)
      for (std::size_t j = 0; j < ncols; ++j) b(i, j) = (*this)(row0 + i, col0 + j);
    return b;
  }

  Matrix select_columns(std::span<const std::size_t> which) const {
    Matrix b(rows_, which.size(), field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < which.size(); ++j) b(i, j) = (*this)(i, which[j]);
    return b;
  }

  /// [A | B]
  static Matrix hstack(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.rows_ != b.rows_) raise(Errc::shape_mismatch, "hstack row counts differ");
    Matrix m(a.rows_, a.cols_ + b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
  }

  /// [A; B]
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.cols_ != b.cols_) raise(Errc::shape_mismatch, "vstack column counts differ");
    Matrix m(a.rows_ + b.rows_, a.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, j) = b(i, j);
    return m;
  }

  /// diag(A, B)
  static Matrix direct_sum(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    Matrix m(a.rows_ + b.rows_, a.cols_ + b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, a.cols_ + j) = b(i, j);
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator-(Matrix a) {
    for (auto& e : a.data_) e = -e;
    return a;
  }

  friend Matrix operator*(const S& c, Matrix a) {
    for (auto& e : a.data_) e *= c;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same_field(b);
    if (a.cols_ != b.rows_) {
      raise(Errc::shape_mismatch, "cannot multiply " + a.shape_string() + " by " + b.shape_string());
    }
    Matrix c(a.rows_, b.cols_, a.field_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const S& ail = a(i, l);
        if (ail.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += ail * b(l, j);
      }
    }
    return c;
  }

  /// Exact equality; matrices over different fields are never equal.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = rows_ * 0x9E3779B97F4A7C15ULL ^ cols_;
    for (const auto& e : data_) h = (h ^ e.hash()) * 0x100000001B3ULL;
    return h;
  }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  void require_square(const char* what) const {
    if (!is_square()) raise(Errc::not_square, std::string(what) + " needs a square matrix, got " + shape_string());
  }

  void require_same_field(const Matrix& o) const {
    if (!(field_ == o.field_)) {
      raise(Errc::field_mismatch, field_.to_string() + " matrix combined with " + o.field_.to_string() + " matrix");
    }
  }

 private:
  void require_same_shape(const Matrix& o, const char* op) const {
    require_same_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      raise(Errc::shape_mismatch, std::string("operator") + op + " on " + shape_string() + " and " + o.shape_string());
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  FieldDescriptor field_;
  std::vector<S> data_;
};

template <ExactScalar S>
struct MatrixHash {
  std::size_t operator()(const Matrix<S>& m) const noexcept { return m.hash(); }
};

using RationalMatrix = Matrix<Rational>;
using ResidueMatrix = Matrix<Residue>;

}  // namespace drazin
