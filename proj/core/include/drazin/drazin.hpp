#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "drazin/matrix.hpp"

namespace drazin {

/// How a Drazin inverse was constructed.
enum class Route {
  rank_factorization,  // A: full-rank factorization of x^k
  image_kernel,        // B: im(x^{k+1}) (+) ker(x^{k+1}) change of basis
  monoid_cycle,        // C: power-cycle detection in a finite monoid
};

std::string_view to_string(Route route) noexcept;

/// The Drazin inverse of a square matrix x together with its index k and
/// induced idempotent e_x = x x^D:
///
///   x^{k+1} x^D = x^k  (k minimal),   x^D x x^D = x^D,   x x^D = x^D x.
template <ExactScalar S>
struct DrazinData {
  Matrix<S> inverse;
  std::size_t index;
  Matrix<S> idempotent;
  Route route;
};

/// Least k with rank(x^k) == rank(x^{k+1}); never exceeds x.rows().
template <ExactScalar S>
std::size_t drazin_index(const Matrix<S>& x);

/// Route A. With x^k = M E a full-rank factorization, the core
/// E x M is invertible and x^D = M (E x M)^{-1} E, written here through the
/// induced automorphism gamma of im(x^k) as M (gamma^{-1})^{k+1} E.
template <ExactScalar S>
DrazinData<S> drazin_inverse(const Matrix<S>& x);

/// x^D when ind(x) <= 1, otherwise nullopt.
template <ExactScalar S>
std::optional<Matrix<S>> group_inverse(const Matrix<S>& x);

/// Builds x^D = x^k z^{k+1}, k = max(p, q), from strong pi-regularity
/// witnesses y x^{p+1} = x^p and x^{q+1} z = x^q. Both witness equations
/// are checked first; Errc::witness_invalid if either fails.
template <ExactScalar S>
Matrix<S> drazin_from_pi_witnesses(const Matrix<S>& x, const Matrix<S>& y, std::size_t p,
                                   const Matrix<S>& z, std::size_t q);

}  // namespace drazin
