#include "drazin/linalg.hpp"

#include <utility>

namespace drazin {

template <ExactScalar S>
RowEchelon<S> rref(const Matrix<S>& m) {
  Matrix<S> r = m;
  std::vector<std::size_t> pivots;
  const std::size_t rows = r.rows();
  const std::size_t cols = r.cols();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && r(pivot, col).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(r(pivot, j), r(row, j));
    }
    const S scale = r(row, col).inverse();
    for (std::size_t j = col; j < cols; ++j) r(row, j) *= scale;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const S factor = r(i, col);
      for (std::size_t j = col; j < cols; ++j) r(i, j) -= factor * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  const std::size_t rk = pivots.size();
  return RowEchelon<S>{std::move(r), std::move(pivots), rk};
}

template <ExactScalar S>
std::size_t rank(const Matrix<S>& m) {
  return rref(m).rank;
}

template <ExactScalar S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
  const auto [r, pivots, rk] = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  Matrix<S> basis(cols, cols - rk, m.field());
  std::size_t out = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    basis(free, out) = S::one(m.field());
    for (std::size_t i = 0; i < rk; ++i) basis(pivots[i], out) = -r(i, free);
    ++out;
  }
  return basis;
}

template <ExactScalar S>
Matrix<S> image_basis(const Matrix<S>& m) {
  const auto ech = rref(m);
  return m.select_columns(ech.pivot_columns);
}

template <ExactScalar S>
RankFactorization<S> full_rank_factorization(const Matrix<S>& m) {
  auto ech = rref(m);
  Matrix<S> left = m.select_columns(ech.pivot_columns);
  Matrix<S> right = ech.reduced.block(0, 0, ech.rank, m.cols());
  return RankFactorization<S>{std::move(left), std::move(right), ech.rank};
}

template <ExactScalar S>
std::optional<Matrix<S>> try_invert(const Matrix<S>& m) {
  m.require_square("invert_matrix");
  const std::size_t n = m.rows();
  auto ech = rref(Matrix<S>::hstack(m, Matrix<S>::identity(n, m.field())));
  // Singular iff some pivot falls in the identity half.
  if (ech.rank < n || (n > 0 && ech.pivot_columns[n - 1] != n - 1)) return std::nullopt;
  return ech.reduced.block(0, n, n, n);
}

template <ExactScalar S>
Matrix<S> invert_matrix(const Matrix<S>& m) {
  auto inv = try_invert(m);
  if (!inv) raise(Errc::singular_matrix, "matrix of shape " + m.shape_string() + " is singular");
  return *std::move(inv);
}

#define DRAZIN_INSTANTIATE_LINALG(S)                                      \
  template RowEchelon<S> rref(const Matrix<S>&);                          \
  template std::size_t rank(const Matrix<S>&);                            \
  template Matrix<S> kernel_basis(const Matrix<S>&);                      \
  template Matrix<S> image_basis(const Matrix<S>&);                       \
  template RankFactorization<S> full_rank_factorization(const Matrix<S>&); \
  template std::optional<Matrix<S>> try_invert(const Matrix<S>&);         \
  template Matrix<S> invert_matrix(const Matrix<S>&);

DRAZIN_INSTANTIATE_LINALG(Rational)
DRAZIN_INSTANTIATE_LINALG(Residue)

}  // namespace drazin
