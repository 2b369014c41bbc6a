#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "drazin/matrix.hpp"

namespace drazin {

template <ExactScalar S>
struct RowEchelon {
  Matrix<S> reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row.
template <ExactScalar S>
RowEchelon<S> rref(const Matrix<S>& m);

template <ExactScalar S>
std::size_t rank(const Matrix<S>& m);

/// Columns form the canonical basis of {v : M v = 0}: one vector per free
/// column j, with a 1 in position j and zeros in the other free positions.
template <ExactScalar S>
Matrix<S> kernel_basis(const Matrix<S>& m);

/// The pivot columns of M, a basis of its column space.
template <ExactScalar S>
Matrix<S> image_basis(const Matrix<S>& m);

/// M = left * right with left n x r (the pivot columns of M) and
/// right r x m (the nonzero rows of rref(M)).
template <ExactScalar S>
struct RankFactorization {
  Matrix<S> left;
  Matrix<S> right;
  std::size_t rank;
};

template <ExactScalar S>
RankFactorization<S> full_rank_factorization(const Matrix<S>& m);

/// Throws Errc::not_square or Errc::singular_matrix.
template <ExactScalar S>
Matrix<S> invert_matrix(const Matrix<S>& m);

/// nullopt when M is singular. Throws Errc::not_square.
template <ExactScalar S>
std::optional<Matrix<S>> try_invert(const Matrix<S>& m);

}  // namespace drazin
