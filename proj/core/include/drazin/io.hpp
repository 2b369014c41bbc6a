#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "drazin/axioms.hpp"
#include "drazin/drazin.hpp"
#include "drazin/field.hpp"
#include "drazin/finite.hpp"
#include "drazin/matrix.hpp"

// JSON encodings. Rationals are strings "num/den"; residues are integers and
// the field travels separately as {"field":"Q"} or {"field":"Fp","p":5}.
// Every decoding failure is Errc::parse_error, except shape problems
// (Errc::shape_mismatch) and bad moduli (Errc::non_prime_modulus).

namespace drazin::io {

using nlohmann::json;

/// Wraps json::parse, mapping its exceptions to Errc::parse_error.
json parse(std::string_view text);

json field_to_json(const FieldDescriptor& field);
FieldDescriptor field_from_json(const json& j);

json scalar_to_json(const Rational& r);
json scalar_to_json(const Residue& r);

/// Q accepts integers and strings "a" or "a/b"; F_p accepts integers and
/// integer strings, reduced mod p.
template <ExactScalar S>
S scalar_from_json(const json& j, const FieldDescriptor& field);

template <>
Rational scalar_from_json<Rational>(const json& j, const FieldDescriptor& field);
template <>
Residue scalar_from_json<Residue>(const json& j, const FieldDescriptor& field);

template <ExactScalar S>
json matrix_to_json(const Matrix<S>& m);

/// Accepts {"rows","cols","entries"} or a bare list of rows. A bare empty
/// list is the 0 x 0 matrix.
template <ExactScalar S>
Matrix<S> matrix_from_json(const json& j, const FieldDescriptor& field);

json endofun_to_json(const EndoFun& f);
/// Accepts {"n","table"} or a bare table.
EndoFun endofun_from_json(const json& j);

json report_to_json(const AxiomReport& report);

template <ExactScalar S>
json drazin_data_to_json(const DrazinData<S>& d);

}  // namespace drazin::io
