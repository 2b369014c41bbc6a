#pragma once

#include <cstddef>
#include <vector>

#include "drazin/drazin.hpp"
#include "drazin/matrix.hpp"

namespace drazin {

/// e = section * retraction and retraction * section = identity on a
/// space of dimension through_dim = rank(e).
template <ExactScalar S>
struct IdempotentSplitting {
  Matrix<S> retraction;  // through_dim x n
  Matrix<S> section;     // n x through_dim
  std::size_t through_dim;
};

/// alpha is the automorphism induced by x on the retract of e_x;
/// alpha_inverse is obtained the same way from x^D.
template <ExactScalar S>
struct SplittingIso {
  IdempotentSplitting<S> splitting;
  Matrix<S> alpha;
  Matrix<S> alpha_inverse;
};

template <ExactScalar S>
struct CoreNilpotent {
  Matrix<S> core;
  Matrix<S> nilpotent_part;
  std::size_t nilpotent_index;
};

/// x = change_of_basis * diag(invertible_block, nilpotent_block) * change_of_basis^{-1}.
template <ExactScalar S>
struct FittingData {
  Matrix<S> change_of_basis;
  Matrix<S> inverse_change_of_basis;
  Matrix<S> invertible_block;
  Matrix<S> nilpotent_block;
};

/// Sections s_i and retractions r_i for i in [-window, window], built from a
/// splitting (r, s) of e_x:
///
///   i > 0:  s_i = x^i s,        r_i = r (x^D)^i
///   i < 0:  s_i = (x^D)^{-i} s, r_i = r x^{-i}
template <ExactScalar S>
struct EventuatingFamily {
  std::size_t window;
  std::vector<Matrix<S>> sections;
  std::vector<Matrix<S>> retractions;
  std::size_t index;

  const Matrix<S>& section(std::ptrdiff_t i) const { return sections.at(offset(i)); }
  const Matrix<S>& retraction(std::ptrdiff_t i) const { return retractions.at(offset(i)); }

 private:
  std::size_t offset(std::ptrdiff_t i) const { return static_cast<std::size_t>(i + static_cast<std::ptrdiff_t>(window)); }
};

/// Splits an idempotent through its full-rank factorization.
/// Throws Errc::not_idempotent unless e * e == e.
template <ExactScalar S>
IdempotentSplitting<S> split_idempotent(const Matrix<S>& e);

// Every operation below re-validates `d` against x before use and throws
// Errc::invalid_drazin_data if it is not the Drazin data of x.

template <ExactScalar S>
SplittingIso<S> splitting_iso(const Matrix<S>& x, const DrazinData<S>& d);

/// core = x x^D x, nilpotent_part = x - core.
template <ExactScalar S>
CoreNilpotent<S> core_nilpotent(const Matrix<S>& x, const DrazinData<S>& d);

/// True iff x^{k+1} + (I - e_x) is invertible and
/// x^D = x^k (x^{k+1} + I - e_x)^{-1} = (x^{k+1} + I - e_x)^{-1} x^k.
template <ExactScalar S>
bool complement_formula_check(const Matrix<S>& x, const DrazinData<S>& d);

template <ExactScalar S>
FittingData<S> fitting_decomposition(const Matrix<S>& x, const DrazinData<S>& d);

/// Route B: change of basis to im(x^{k+1}) (+) ker(x^{k+1}).
/// Throws Errc::internal_inconsistency if that basis is singular.
template <ExactScalar S>
DrazinData<S> image_kernel_drazin(const Matrix<S>& x);

template <ExactScalar S>
EventuatingFamily<S> eventuating_family(const Matrix<S>& x, const DrazinData<S>& d, std::size_t window);

/// Window k + 2.
template <ExactScalar S>
EventuatingFamily<S> eventuating_family(const Matrix<S>& x, const DrazinData<S>& d);

/// e_x x^{k+1} = x^{k+1} = x^{k+1} e_x and x^{k+1} + (I - e_x) invertible,
/// i.e. x^{k+1} is an automorphism of (A, e_x) in the idempotent splitting.
template <ExactScalar S>
bool munn_power_iso_check(const Matrix<S>& x, const DrazinData<S>& d);

/// Throws Errc::invalid_drazin_data unless d satisfies the Drazin axioms
/// for x with minimal index d.index and idempotent x * d.inverse.
template <ExactScalar S>
void require_verified(const Matrix<S>& x, const DrazinData<S>& d);

}  // namespace drazin
