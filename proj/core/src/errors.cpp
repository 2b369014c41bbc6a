#include "drazin/errors.hpp"

namespace drazin {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::non_prime_modulus: return "NonPrimeModulus";
    case Errc::field_mismatch: return "FieldMismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::not_square: return "NotSquare";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::witness_invalid: return "WitnessInvalid";
    case Errc::invalid_drazin_data: return "InvalidDrazinData";
    case Errc::cycle_not_found: return "CycleNotFound";
    case Errc::enumeration_too_large: return "EnumerationTooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_inconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void raise(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace drazin
