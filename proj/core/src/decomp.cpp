#include "drazin/decomp.hpp"

#include <utility>

#include "drazin/axioms.hpp"
#include "drazin/errors.hpp"
#include "drazin/linalg.hpp"

namespace drazin {

template <ExactScalar S>
void require_verified(const Matrix<S>& x, const DrazinData<S>& d) {
  if (!x.is_square()) raise(Errc::not_square, "x must be square");
  if (d.inverse.rows() != x.rows() || d.inverse.cols() != x.cols() || d.idempotent.rows() != x.rows() ||
      d.idempotent.cols() != x.cols()) {
    raise(Errc::invalid_drazin_data, "Drazin data has the wrong shape");
  }
  auto report = check_drazin(x, d.inverse);
  if (!report.passed) raise(Errc::invalid_drazin_data, "supplied inverse fails the Drazin axioms");
  if (report.witnessed_index != d.index) raise(Errc::invalid_drazin_data, "supplied index is not minimal");
  if (!(d.idempotent == x * d.inverse)) raise(Errc::invalid_drazin_data, "supplied idempotent is not x x^D");
}

template <ExactScalar S>
IdempotentSplitting<S> split_idempotent(const Matrix<S>& e) {
  e.require_square("split_idempotent");
  if (!(e * e == e)) raise(Errc::not_idempotent, "e e != e");
  auto factors = full_rank_factorization(e);
  return IdempotentSplitting<S>{std::move(factors.right), std::move(factors.left), factors.rank};
}

template <ExactScalar S>
SplittingIso<S> splitting_iso(const Matrix<S>& x, const DrazinData<S>& d) {
  require_verified(x, d);
  auto splitting = split_idempotent(d.idempotent);
  Matrix<S> alpha = splitting.retraction * x * splitting.section;
  Matrix<S> alpha_inverse = splitting.retraction * d.inverse * splitting.section;
  return SplittingIso<S>{std::move(splitting), std::move(alpha), std::move(alpha_inverse)};
}

template <ExactScalar S>
CoreNilpotent<S> core_nilpotent(const Matrix<S>& x, const DrazinData<S>& d) {
  require_verified(x, d);
  Matrix<S> core = x * d.inverse * x;
  Matrix<S> nilpotent = x - core;
  std::size_t index = 0;
  Matrix<S> power = Matrix<S>::identity(x.rows(), x.field());
  while (!power.is_zero()) {
    power = power * nilpotent;
    ++index;
  }
  return CoreNilpotent<S>{std::move(core), std::move(nilpotent), index};
}

template <ExactScalar S>
bool complement_formula_check(const Matrix<S>& x, const DrazinData<S>& d) {
  require_verified(x, d);
  const std::size_t n = x.rows();
  const Matrix<S> xk = x.pow(d.index);
  const Matrix<S> shifted = xk * x + (Matrix<S>::identity(n, x.field()) - d.idempotent);
  auto inv = try_invert(shifted);
  if (!inv) return false;
  return xk * *inv == d.inverse && *inv * xk == d.inverse;
}

template <ExactScalar S>
FittingData<S> fitting_decomposition(const Matrix<S>& x, const DrazinData<S>& d) {
  require_verified(x, d);
  const std::size_t n = x.rows();
  const auto split = split_idempotent(d.idempotent);
  const auto complement = split_idempotent(Matrix<S>::identity(n, x.field()) - d.idempotent);
  const Matrix<S> nilpotent = x - x * d.inverse * x;
  return FittingData<S>{
      Matrix<S>::hstack(split.section, complement.section),
      Matrix<S>::vstack(split.retraction, complement.retraction),
      split.retraction * x * split.section,
      complement.retraction * nilpotent * complement.section,
  };
}

template <ExactScalar S>
DrazinData<S> image_kernel_drazin(const Matrix<S>& x) {
  const std::size_t k = drazin_index(x);
  const std::size_t n = x.rows();
  const Matrix<S> top = x.pow(k + 1);
  const Matrix<S> iota = image_basis(top);
  const Matrix<S> kappa = kernel_basis(top);
  const Matrix<S> psi = Matrix<S>::hstack(iota, kappa);
  auto psi_inv = try_invert(psi);
  if (!psi_inv) raise(Errc::internal_inconsistency, "image and kernel of x^{k+1} do not span");
  const std::size_t r = iota.cols();
  const Matrix<S> phi1 = psi_inv->block(0, 0, r, n);
  const Matrix<S> alpha = phi1 * x * iota;
  auto alpha_inv = try_invert(alpha);
  if (!alpha_inv) raise(Errc::internal_inconsistency, "x is not invertible on im(x^{k+1})");
  const Matrix<S> middle = Matrix<S>::direct_sum(*alpha_inv, Matrix<S>::zero(n - r, n - r, x.field()));
  Matrix<S> inverse = psi * middle * *psi_inv;
  Matrix<S> idempotent = x * inverse;
  return DrazinData<S>{std::move(inverse), k, std::move(idempotent), Route::image_kernel};
}

template <ExactScalar S>
EventuatingFamily<S> eventuating_family(const Matrix<S>& x, const DrazinData<S>& d, std::size_t window) {
  require_verified(x, d);
  const auto split = split_idempotent(d.idempotent);
  const std::size_t count = 2 * window + 1;
  std::vector<Matrix<S>> sections(count, split.section);
  std::vector<Matrix<S>> retractions(count, split.retraction);
  for (std::size_t j = 1; j <= window; ++j) {
    // s_j = x s_{j-1}, r_j = r_{j-1} x^D; s_{-j} = x^D s_{-j+1}, r_{-j} = r_{-j+1} x.
    sections[window + j] = x * sections[window + j - 1];
    retractions[window + j] = retractions[window + j - 1] * d.inverse;
    sections[window - j] = d.inverse * sections[window - j + 1];
    retractions[window - j] = retractions[window - j + 1] * x;
  }
  return EventuatingFamily<S>{window, std::move(sections), std::move(retractions), d.index};
}

template <ExactScalar S>
EventuatingFamily<S> eventuating_family(const Matrix<S>& x, const DrazinData<S>& d) {
  return eventuating_family(x, d, d.index + 2);
}

template <ExactScalar S>
bool munn_power_iso_check(const Matrix<S>& x, const DrazinData<S>& d) {
  require_verified(x, d);
  const Matrix<S> top = x.pow(d.index + 1);
  const Matrix<S>& e = d.idempotent;
  if (!(e * top == top) || !(top * e == top)) return false;
  return try_invert(top + (Matrix<S>::identity(x.rows(), x.field()) - e)).has_value();
}

#define DRAZIN_INSTANTIATE_DECOMP(S)                                                                   \
  template void require_verified(const Matrix<S>&, const DrazinData<S>&);                              \
  template IdempotentSplitting<S> split_idempotent(const Matrix<S>&);                                  \
  template SplittingIso<S> splitting_iso(const Matrix<S>&, const DrazinData<S>&);                      \
  template CoreNilpotent<S> core_nilpotent(const Matrix<S>&, const DrazinData<S>&);                    \
  template bool complement_formula_check(const Matrix<S>&, const DrazinData<S>&);                      \
  template FittingData<S> fitting_decomposition(const Matrix<S>&, const DrazinData<S>&);               \
  template DrazinData<S> image_kernel_drazin(const Matrix<S>&);                                        \
  template EventuatingFamily<S> eventuating_family(const Matrix<S>&, const DrazinData<S>&, std::size_t); \
  template EventuatingFamily<S> eventuating_family(const Matrix<S>&, const DrazinData<S>&);            \
  template bool munn_power_iso_check(const Matrix<S>&, const DrazinData<S>&);

DRAZIN_INSTANTIATE_DECOMP(Rational)
DRAZIN_INSTANTIATE_DECOMP(Residue)

}  // namespace drazin
