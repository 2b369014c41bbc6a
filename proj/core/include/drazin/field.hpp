#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "drazin/errors.hpp"

namespace drazin {

enum class FieldKind { rational, prime };

/// Names the ground field of a computation: the rationals or F_p.
/// Every scalar carries enough information to recover its descriptor, and
/// arithmetic between scalars of different descriptors is a hard error.
class FieldDescriptor {
 public:
  static FieldDescriptor rationals() noexcept { return FieldDescriptor{FieldKind::rational, 0}; }

  /// Throws Errc::non_prime_modulus unless p is a prime below 2^31.
  static FieldDescriptor prime_field(std::uint64_t p);

  FieldKind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == FieldKind::rational; }

  /// Zero for the rationals.
  std::uint32_t modulus() const noexcept { return modulus_; }

  /// "Q" or "F<p>".
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  friend class Residue;
  FieldDescriptor(FieldKind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}

  FieldKind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Element of Q, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  explicit Rational(long long n) : value_(static_cast<long>(n)) {}
  /// Throws Errc::division_by_zero when den == 0.
  Rational(const mpz_class& num, const mpz_class& den);

  static Rational zero(const FieldDescriptor& field);
  static Rational one(const FieldDescriptor& field);
  /// Canonical embedding of n. Throws Errc::field_mismatch for a prime field.
  static Rational from_integer(long long n, const FieldDescriptor& field);
  /// Accepts "a", "-a" and "a/b" with integer a, b (b != 0).
  static Rational parse(std::string_view text);

  FieldDescriptor field() const noexcept { return FieldDescriptor::rationals(); }

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& value() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  /// Throws Errc::division_by_zero on zero.
  Rational inverse() const;

  /// Always "num/den", e.g. "3/1", "-1/2", "0/1".
  std::string to_string() const;
  std::size_t hash() const noexcept;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }

 private:
  mpq_class value_;
};

/// Element of F_p stored as a fully reduced residue together with p.
class Residue {
 public:
  /// `value` is reduced into [0, p). The descriptor must be a prime field.
  Residue(long long value, const FieldDescriptor& field);

  static Residue zero(const FieldDescriptor& field) { return Residue(0, field); }
  static Residue one(const FieldDescriptor& field) { return Residue(1, field); }
  static Residue from_integer(long long n, const FieldDescriptor& field) { return Residue(n, field); }

  FieldDescriptor field() const noexcept { return FieldDescriptor{FieldKind::prime, modulus_}; }
  std::uint32_t value() const noexcept { return value_; }
  std::uint32_t modulus() const noexcept { return modulus_; }

  bool is_zero() const noexcept { return value_ == 0; }
  Residue inverse() const;

  std::string to_string() const { return std::to_string(value_); }
  std::size_t hash() const noexcept { return value_; }

  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  Residue& operator/=(const Residue& o) { return *this *= o.inverse(); }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend Residue operator-(const Residue& a) {
    Residue r = a;
    r.value_ = a.value_ == 0 ? 0 : a.modulus_ - a.value_;
    return r;
  }
  friend bool operator==(const Residue& a, const Residue& b) {
    a.require_same_field(b);
    return a.value_ == b.value_;
  }

 private:
  void require_same_field(const Residue& o) const;

  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// The scalar interface every matrix algorithm is written against.
template <class S>
concept ExactScalar = std::copy_constructible<S> && requires(const S& a, const S& b, long long n,
                                                            const FieldDescriptor& f) {
  { S::zero(f) } -> std::same_as<S>;
  { S::one(f) } -> std::same_as<S>;
  { S::from_integer(n, f) } -> std::same_as<S>;
  { a.field() } -> std::convertible_to<FieldDescriptor>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::same_as<S>;
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a * b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a == b } -> std::convertible_to<bool>;
  { a.hash() } -> std::convertible_to<std::size_t>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

inline void Residue::require_same_field(const Residue& o) const {
  if (modulus_ != o.modulus_) {
    raise(Errc::field_mismatch, "F" + std::to_string(modulus_) + " scalar combined with F" +
                                    std::to_string(o.modulus_) + " scalar");
  }
}

inline Residue& Residue::operator+=(const Residue& o) {
  require_same_field(o);
  std::uint32_t s = value_ + o.value_;
  value_ = s >= modulus_ ? s - modulus_ : s;
  return *this;
}

inline Residue& Residue::operator-=(const Residue& o) {
  require_same_field(o);
  value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (modulus_ - o.value_);
  return *this;
}

inline Residue& Residue::operator*=(const Residue& o) {
  require_same_field(o);
  value_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(value_) * o.value_ % modulus_);
  return *this;
}

template <ExactScalar S>
S invert(const S& a) {
  return a.inverse();
}

}  // namespace drazin
