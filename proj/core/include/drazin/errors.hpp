#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drazin {

/// Failure categories raised by the library. The CLI maps
/// `internal_inconsistency` to exit status 2 and everything else to 1.
enum class Errc {
  division_by_zero,
  non_prime_modulus,
  field_mismatch,
  shape_mismatch,
  not_square,
  singular_matrix,
  not_idempotent,
  witness_invalid,
  invalid_drazin_data,
  cycle_not_found,
  enumeration_too_large,
  parse_error,
  internal_inconsistency,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

}  // namespace drazin
