#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>

#include "drazin/matrix.hpp"

namespace drazin {

/// A monoid whose elements can be multiplied, compared and hashed.
/// `multiply(a, b)` is the monoid product a*b; for functions and matrices
/// that is "apply b, then a".
template <class M>
concept FiniteMonoid = requires(const M& m, const typename M::element_type& a) {
  typename M::element_type;
  { m.identity() } -> std::convertible_to<typename M::element_type>;
  { m.multiply(a, a) } -> std::convertible_to<typename M::element_type>;
  { m.equal(a, a) } -> std::convertible_to<bool>;
  { m.hash(a) } -> std::convertible_to<std::size_t>;
};

template <FiniteMonoid M>
typename M::element_type power(const M& monoid, const typename M::element_type& x, std::size_t k) {
  auto result = monoid.identity();
  for (std::size_t i = 0; i < k; ++i) result = monoid.multiply(result, x);
  return result;
}

/// Multiplicative monoid of n x n matrices over a field.
template <ExactScalar S>
class MatrixMonoid {
 public:
  using element_type = Matrix<S>;

  MatrixMonoid(std::size_t n, FieldDescriptor field) : n_(n), field_(field) {}

  std::size_t dimension() const noexcept { return n_; }
  const FieldDescriptor& field() const noexcept { return field_; }

  Matrix<S> identity() const { return Matrix<S>::identity(n_, field_); }
  Matrix<S> multiply(const Matrix<S>& a, const Matrix<S>& b) const { return a * b; }
  bool equal(const Matrix<S>& a, const Matrix<S>& b) const { return a == b; }
  std::size_t hash(const Matrix<S>& a) const noexcept { return a.hash(); }

 private:
  std::size_t n_;
  FieldDescriptor field_;
};

/// (Z/n, *). Not a field in general; used as a plain finite monoid.
class ModularMultiplicativeMonoid {
 public:
  using element_type = std::uint64_t;

  explicit ModularMultiplicativeMonoid(std::uint64_t modulus) : modulus_(modulus) {}

  std::uint64_t order() const noexcept { return modulus_; }
  std::uint64_t element(std::int64_t v) const {
    auto m = static_cast<std::int64_t>(modulus_);
    return static_cast<std::uint64_t>(((v % m) + m) % m);
  }

  std::uint64_t identity() const noexcept { return modulus_ == 1 ? 0 : 1; }
  std::uint64_t multiply(std::uint64_t a, std::uint64_t b) const noexcept { return a * b % modulus_; }
  bool equal(std::uint64_t a, std::uint64_t b) const noexcept { return a == b; }
  std::size_t hash(std::uint64_t a) const noexcept { return std::hash<std::uint64_t>{}(a); }

 private:
  std::uint64_t modulus_;
};

/// Monoid given by an opaque value type plus callbacks. The callbacks must
/// be reentrant; they are invoked without synchronization.
template <class T>
class CallbackMonoid {
 public:
  using element_type = T;

  CallbackMonoid(T identity, std::function<T(const T&, const T&)> multiply,
                 std::function<bool(const T&, const T&)> equal, std::function<std::size_t(const T&)> hash)
      : identity_(std::move(identity)),
        multiply_(std::move(multiply)),
        equal_(std::move(equal)),
        hash_(std::move(hash)) {}

  T identity() const { return identity_; }
  T multiply(const T& a, const T& b) const { return multiply_(a, b); }
  bool equal(const T& a, const T& b) const { return equal_(a, b); }
  std::size_t hash(const T& a) const { return hash_(a); }

 private:
  T identity_;
  std::function<T(const T&, const T&)> multiply_;
  std::function<bool(const T&, const T&)> equal_;
  std::function<std::size_t(const T&)> hash_;
};

}  // namespace drazin
