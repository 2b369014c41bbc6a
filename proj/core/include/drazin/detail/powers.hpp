#pragma once

#include <cstddef>

#include "drazin/matrix.hpp"

namespace drazin::detail {

/// The Drazin index k of x together with x^k.
template <ExactScalar S>
struct StablePower {
  std::size_t index;
  Matrix<S> power;
};

template <ExactScalar S>
StablePower<S> stable_power(const Matrix<S>& x);

}  // namespace drazin::detail
