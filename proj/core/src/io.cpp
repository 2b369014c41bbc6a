#include "drazin/io.hpp"

#include <algorithm>
#include <climits>
#include <type_traits>
#include <vector>

namespace drazin::io {

namespace {

[[noreturn]] void bad(const std::string& what) { raise(Errc::parse_error, what); }

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t as_count(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

Residue residue_from_mpz(const mpz_class& v, const FieldDescriptor& field) {
  const unsigned long r = mpz_fdiv_ui(v.get_mpz_t(), field.modulus());
  return Residue(static_cast<long long>(r), field);
}

}  // namespace

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

json field_to_json(const FieldDescriptor& field) {
  if (field.is_rational()) return json{{"field", "Q"}};
  return json{{"field", "Fp"}, {"p", field.modulus()}};
}

FieldDescriptor field_from_json(const json& j) {
  if (!j.is_object()) bad("field descriptor must be an object");
  const json& name = member(j, "field");
  if (!name.is_string()) bad("\"field\" must be \"Q\" or \"Fp\"");
  const auto s = name.get<std::string>();
  if (s == "Q") return FieldDescriptor::rationals();
  if (s == "Fp") {
    const json& p = member(j, "p");
    if (!p.is_number_integer()) bad("\"p\" must be an integer");
    if (p.is_number_unsigned() || p.get<long long>() >= 0) return FieldDescriptor::prime_field(p.get<std::uint64_t>());
    raise(Errc::non_prime_modulus, "negative modulus");
  }
  bad("unknown field \"" + s + "\"");
}

json scalar_to_json(const Rational& r) { return r.to_string(); }
json scalar_to_json(const Residue& r) { return r.value(); }

template <>
Rational scalar_from_json<Rational>(const json& j, const FieldDescriptor& field) {
  if (!field.is_rational()) raise(Errc::field_mismatch, "expected a rational field");
  if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())), mpz_class(1));
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  bad("rational entry must be an integer or a \"num/den\" string, got " + j.dump());
}

template <>
Residue scalar_from_json<Residue>(const json& j, const FieldDescriptor& field) {
  if (field.is_rational()) raise(Errc::field_mismatch, "expected a prime field");
  if (j.is_number_unsigned()) return residue_from_mpz(mpz_class(std::to_string(j.get<std::uint64_t>())), field);
  if (j.is_number_integer()) return Residue(j.get<long long>(), field);
  if (j.is_string()) {
    auto r = Rational::parse(j.get<std::string>());
    if (r.denominator() != 1) bad("F_p entry must be an integer, got " + j.dump());
    return residue_from_mpz(r.numerator(), field);
  }
  bad("F_p entry must be an integer, got " + j.dump());
}

template <ExactScalar S>
json matrix_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <ExactScalar S>
Matrix<S> matrix_from_json(const json& j, const FieldDescriptor& field) {
  const json* entries = &j;
  std::size_t rows = 0;
  std::size_t cols = 0;
  bool explicit_shape = false;
  if (j.is_object()) {
    rows = as_count(member(j, "rows"), "rows");
    cols = as_count(member(j, "cols"), "cols");
    entries = &member(j, "entries");
    explicit_shape = true;
  }
  if (!entries->is_array()) bad("matrix entries must be a list of rows");
  if (!explicit_shape) {
    rows = entries->size();
    cols = rows == 0 ? 0 : (*entries)[0].is_array() ? (*entries)[0].size() : 0;
  }
  if (entries->size() != rows) raise(Errc::shape_mismatch, "row count does not match \"rows\"");
  Matrix<S> m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& row = (*entries)[i];
    if (!row.is_array()) bad("matrix row " + std::to_string(i) + " is not a list");
    if (row.size() != cols) raise(Errc::shape_mismatch, "row " + std::to_string(i) + " has the wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json<S>(row[c], field);
  }
  return m;
}

json endofun_to_json(const EndoFun& f) { return json{{"n", f.size()}, {"table", f.table()}}; }

EndoFun endofun_from_json(const json& j) {
  const json* table = &j;
  std::optional<std::size_t> n;
  if (j.is_object()) {
    n = as_count(member(j, "n"), "n");
    table = &member(j, "table");
  }
  if (!table->is_array()) bad("endofunction table must be a list");
  std::vector<std::size_t> t;
  t.reserve(table->size());
  for (const auto& v : *table) t.push_back(as_count(v, "table entry"));
  if (n && *n != t.size()) raise(Errc::shape_mismatch, "\"n\" does not match the table length");
  return EndoFun(std::move(t));
}

json report_to_json(const AxiomReport& report) {
  json out{{"system", std::string(to_string(report.system))},
           {"passed", report.passed},
           {"failed_axioms", report.failed_axioms}};
  out["witnessed_index"] = report.witnessed_index ? json(*report.witnessed_index) : json(nullptr);
  return out;
}

template <ExactScalar S>
json drazin_data_to_json(const DrazinData<S>& d) {
  return json{{"inverse", matrix_to_json(d.inverse)},
              {"index", d.index},
              {"idempotent", matrix_to_json(d.idempotent)},
              {"route", std::string(to_string(d.route))}};
}

#define DRAZIN_INSTANTIATE_IO(S)                                           \
  template json matrix_to_json(const Matrix<S>&);                          \
  template Matrix<S> matrix_from_json(const json&, const FieldDescriptor&); \
  template json drazin_data_to_json(const DrazinData<S>&);

DRAZIN_INSTANTIATE_IO(Rational)
DRAZIN_INSTANTIATE_IO(Residue)

}  // namespace drazin::io
