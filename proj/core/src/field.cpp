#include "drazin/field.hpp"

#include <cctype>
#include <functional>
#include <limits>

namespace drazin {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p > std::numeric_limits<std::int32_t>::max() || !is_prime(p)) {
    raise(Errc::non_prime_modulus, std::to_string(p) + " is not a supported prime modulus");
  }
  return FieldDescriptor{FieldKind::prime, static_cast<std::uint32_t>(p)};
}

std::string FieldDescriptor::to_string() const {
  return is_rational() ? std::string("Q") : "F" + std::to_string(modulus_);
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) raise(Errc::division_by_zero, "zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::zero(const FieldDescriptor& field) { return from_integer(0, field); }
Rational Rational::one(const FieldDescriptor& field) { return from_integer(1, field); }

Rational Rational::from_integer(long long n, const FieldDescriptor& field) {
  if (!field.is_rational()) {
    raise(Errc::field_mismatch, "rational scalar requested in " + field.to_string());
  }
  return Rational(n);
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) {
    raise(Errc::parse_error, "malformed integer '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    Rational r;
    r.value_ = mpq_class(parse_integer(text));
    return r;
  }
  auto den = text.substr(slash + 1);
  if (!den.empty() && den.front() == '-') {
    raise(Errc::parse_error, "denominator must be unsigned in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(den));
}

Rational Rational::inverse() const {
  if (is_zero()) raise(Errc::division_by_zero, "0 has no inverse in Q");
  Rational r;
  r.value_ = 1 / value_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) raise(Errc::division_by_zero, "division by 0 in Q");
  value_ /= o.value_;
  return *this;
}

std::string Rational::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::size_t Rational::hash() const noexcept {
  // Reductions modulo two large primes; collisions only cost a comparison.
  const unsigned long a = mpz_fdiv_ui(value_.get_num_mpz_t(), 4294967291UL);
  const unsigned long b = mpz_fdiv_ui(value_.get_den_mpz_t(), 4294967279UL);
  return std::hash<unsigned long>{}(a * 0x9E3779B97F4A7C15ULL ^ b);
}

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(long long value, const FieldDescriptor& field) : modulus_(field.modulus()) {
  if (field.is_rational()) {
    raise(Errc::field_mismatch, "residue requested in Q");
  }
  long long r = value % static_cast<long long>(modulus_);
  if (r < 0) r += modulus_;
  value_ = static_cast<std::uint32_t>(r);
}

Residue Residue::inverse() const {
  if (value_ == 0) {
    raise(Errc::division_by_zero, "0 has no inverse in F" + std::to_string(modulus_));
  }
  // Extended Euclid on (value, p).
  long long a = value_, b = modulus_;
  long long x0 = 1, x1 = 0;
  while (b != 0) {
    long long q = a / b;
    long long t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  return Residue(x0, field());
}

}  // namespace drazin
