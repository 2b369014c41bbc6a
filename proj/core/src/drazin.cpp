#include "drazin/drazin.hpp"

#include <algorithm>
#include <utility>

#include "drazin/linalg.hpp"
#include "drazin/detail/powers.hpp"

namespace drazin {

std::string_view to_string(Route route) noexcept {
  switch (route) {
    case Route::rank_factorization: return "rank_factorization";
    case Route::image_kernel: return "image_kernel";
    case Route::monoid_cycle: return "monoid_cycle";
  }
  return "unknown";
}

namespace detail {

template <ExactScalar S>
StablePower<S> stable_power(const Matrix<S>& x) {
  x.require_square("drazin_index");
  Matrix<S> power = Matrix<S>::identity(x.rows(), x.field());
  std::size_t previous = x.rows();
  for (std::size_t k = 0;; ++k) {
    Matrix<S> next = power * x;
    const std::size_t r = rank(next);
    if (r == previous) return StablePower<S>{k, std::move(power)};
    previous = r;
    power = std::move(next);
  }
}

template StablePower<Rational> stable_power(const Matrix<Rational>&);
template StablePower<Residue> stable_power(const Matrix<Residue>&);

}  // namespace detail

template <ExactScalar S>
std::size_t drazin_index(const Matrix<S>& x) {
  return detail::stable_power(x).index;
}

template <ExactScalar S>
DrazinData<S> drazin_inverse(const Matrix<S>& x) {
  auto [k, xk] = detail::stable_power(x);
  const auto& field = x.field();
  const std::size_t n = x.rows();
  if (k == 0) {
    return DrazinData<S>{invert_matrix(x), 0, Matrix<S>::identity(n, field), Route::rank_factorization};
  }

  // x^k = M E with M injective and E surjective onto im(x^k).
  auto factors = full_rank_factorization(xk);
  const Matrix<S>& m = factors.left;
  const Matrix<S>& e = factors.right;

  // E M is gamma^k, an automorphism of im(x^k) once the rank has settled.
  auto beta_inv = try_invert(e * m);
  if (!beta_inv) raise(Errc::internal_inconsistency, "E*M singular at the stable index");
  // gamma is the map induced by x on im(x^k): x M = M gamma, E x = gamma E.
  const Matrix<S> gamma = *beta_inv * (e * x * m);
  const Matrix<S> gamma_inv = invert_matrix(gamma);

  Matrix<S> inverse = m * gamma_inv.pow(k + 1) * e;
  Matrix<S> idempotent = x * inverse;
  return DrazinData<S>{std::move(inverse), k, std::move(idempotent), Route::rank_factorization};
}

template <ExactScalar S>
std::optional<Matrix<S>> group_inverse(const Matrix<S>& x) {
  auto d = drazin_inverse(x);
  if (d.index > 1) return std::nullopt;
  return std::move(d.inverse);
}

template <ExactScalar S>
Matrix<S> drazin_from_pi_witnesses(const Matrix<S>& x, const Matrix<S>& y, std::size_t p,
                                   const Matrix<S>& z, std::size_t q) {
  x.require_square("drazin_from_pi_witnesses");
  if (y.rows() != x.rows() || y.cols() != x.cols() || z.rows() != x.rows() || z.cols() != x.cols()) {
    raise(Errc::shape_mismatch, "witnesses must have the shape of x");
  }
  if (!(y * x.pow(p + 1) == x.pow(p))) raise(Errc::witness_invalid, "y x^{p+1} != x^p");
  if (!(x.pow(q + 1) * z == x.pow(q))) raise(Errc::witness_invalid, "x^{q+1} z != x^q");
  const std::size_t k = std::max(p, q);
  return x.pow(k) * z.pow(k + 1);
}

#define DRAZIN_INSTANTIATE_CORE(S)                                                   \
  template std::size_t drazin_index(const Matrix<S>&);                               \
  template DrazinData<S> drazin_inverse(const Matrix<S>&);                           \
  template std::optional<Matrix<S>> group_inverse(const Matrix<S>&);                 \
  template Matrix<S> drazin_from_pi_witnesses(const Matrix<S>&, const Matrix<S>&,    \
                                              std::size_t, const Matrix<S>&, std::size_t);

DRAZIN_INSTANTIATE_CORE(Rational)
DRAZIN_INSTANTIATE_CORE(Residue)

}  // namespace drazin
