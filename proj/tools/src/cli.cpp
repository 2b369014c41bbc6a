#include "drazin_cli/cli.hpp"

#include <istream>
#include <iterator>
#include <sstream>
#include <type_traits>

#include <CLI11.hpp>

#include "drazin/axioms.hpp"
#include "drazin/decomp.hpp"
#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/finite.hpp"
#include "drazin/io.hpp"
#include "drazin/pairs.hpp"
#include "pretty.hpp"

namespace drazin::cli {

namespace {

using nlohmann::json;

class Payloads {
 public:
  explicit Payloads(std::istream& in) : in_(in) {}

  json get(const std::string& text, const char* flag) {
    if (text.empty()) raise(Errc::parse_error, std::string("missing --") + flag);
    if (text != "-") return io::parse(text);
    if (stdin_used_) raise(Errc::parse_error, "only one payload can be read from stdin");
    stdin_used_ = true;
    std::string all((std::istreambuf_iterator<char>(in_)), std::istreambuf_iterator<char>());
    return io::parse(all);
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

FieldDescriptor resolve_field(const Request& r) {
  if (r.field == "Q") {
    if (r.p) raise(Errc::parse_error, "--p only applies to --field Fp");
    return FieldDescriptor::rationals();
  }
  if (r.field == "Fp") {
    if (!r.p) raise(Errc::parse_error, "--field Fp needs --p");
    return FieldDescriptor::prime_field(*r.p);
  }
  raise(Errc::parse_error, "unknown field '" + r.field + "' (expected Q or Fp)");
}

Route resolve_route(const std::string& name) {
  if (name == "A" || name == "rank_factorization") return Route::rank_factorization;
  if (name == "B" || name == "image_kernel") return Route::image_kernel;
  if (name == "C" || name == "monoid_cycle") return Route::monoid_cycle;
  raise(Errc::parse_error, "unknown route '" + name + "' (expected A, B or C)");
}

json header(const std::string& command, const FieldDescriptor& field) {
  json out{{"command", command}};
  out.update(io::field_to_json(field));
  return out;
}

[[noreturn]] void defect(const std::string& what) { raise(Errc::internal_inconsistency, what); }

void certify(const AxiomReport& report, const std::string& what) {
  if (!report.passed) defect(what + " fails its own " + std::string(to_string(report.system)) + " check");
}

template <ExactScalar S>
Matrix<S> read_matrix(Payloads& payloads, const std::string& text, const char* flag, const FieldDescriptor& field) {
  return io::matrix_from_json<S>(payloads.get(text, flag), field);
}

template <ExactScalar S>
DrazinData<S> compute(const Matrix<S>& x, Route route, const Request& r) {
  switch (route) {
    case Route::rank_factorization: return drazin_inverse(x);
    case Route::image_kernel: return image_kernel_drazin(x);
    case Route::monoid_cycle:
      if constexpr (std::is_same_v<S, Residue>) {
        return r.max_steps ? monoid_cycle_drazin(x, *r.max_steps) : monoid_cycle_drazin(x);
      } else {
        raise(Errc::field_mismatch, "route C needs a prime field");
      }
  }
  defect("unhandled route");
}

template <ExactScalar S>
json cmd_drazin(const Request& r, Payloads& payloads, const FieldDescriptor& field) {
  const auto x = read_matrix<S>(payloads, r.matrix, "matrix", field);
  x.require_square("drazin");
  const auto d = compute(x, resolve_route(r.route), r);
  const auto report = check_drazin(x, d.inverse);
  certify(report, "Drazin inverse");
  if (report.witnessed_index != d.index) defect("reported index is not the minimal [D.1] index");
  json out = header("drazin", field);
  out.update(io::drazin_data_to_json(d));
  out["axioms"] = json::array({io::report_to_json(report)});
  return out;
}

template <ExactScalar S>
json cmd_group(const Request& r, Payloads& payloads, const FieldDescriptor& field) {
  const auto x = read_matrix<S>(payloads, r.matrix, "matrix", field);
  x.require_square("group");
  const auto d = drazin_inverse(x);
  json out = header("group", field);
  out["index"] = d.index;
  out["exists"] = d.index <= 1;
  if (d.index <= 1) {
    const auto report = check_group(x, d.inverse);
    certify(report, "group inverse");
    out["inverse"] = io::matrix_to_json(d.inverse);
    out["axioms"] = json::array({io::report_to_json(report)});
  } else {
    const auto report = check_drazin(x, d.inverse);
    certify(report, "Drazin inverse");
    out["inverse"] = nullptr;
    out["reason"] = "Drazin index " + std::to_string(d.index) + " exceeds 1";
    out["drazin_inverse"] = io::matrix_to_json(d.inverse);
    out["axioms"] = json::array({io::report_to_json(report)});
  }
  return out;
}

template <ExactScalar S>
json cmd_mp(const Request& r, Payloads& payloads, const FieldDescriptor& field) {
  const auto f = read_matrix<S>(payloads, r.matrix, "matrix", field);
  const auto direct = moore_penrose(f);
  const auto via_pair = mp_via_pair_drazin(f);
  if (direct.exists != via_pair.exists) defect("Gram-rank and pair-Drazin existence tests disagree");
  if (direct.exists && !(*direct.pseudo == *via_pair.pseudo)) defect("the two Moore-Penrose routes disagree");

  const auto ft = f.transpose();
  const auto pair = pair_drazin(OpposingPair<S>(f, ft));
  const auto dv = check_pair_drazin(f, ft, pair.g_over_f, pair.f_over_g);
  certify(dv, "pair Drazin inverse of (f, f^T)");

  json out = header("mp", field);
  out["exists"] = direct.exists;
  out["pseudo"] = direct.exists ? io::matrix_to_json(*direct.pseudo) : json(nullptr);
  out["witness"] = std::string(to_string(direct.witness));
  out["rank"] = direct.rank;
  out["gram_rank_ftf"] = direct.left_gram_rank;
  out["gram_rank_fft"] = direct.right_gram_rank;
  out["pair_route"] = json{{"exists", via_pair.exists},
                           {"witness", std::string(to_string(via_pair.witness))},
                           {"pair_index", pair.index}};
  json axioms = json::array({io::report_to_json(dv)});
  if (direct.exists) {
    const auto mp = check_moore_penrose(f, *direct.pseudo);
    certify(mp, "Moore-Penrose inverse");
    axioms.push_back(io::report_to_json(mp));
  }
  out["axioms"] = std::move(axioms);
  return out;
}

template <ExactScalar S>
json cmd_pair(const Request& r, Payloads& payloads, const FieldDescriptor& field) {
  const auto f = read_matrix<S>(payloads, r.f, "f", field);
  const auto g = read_matrix<S>(payloads, r.g, "g", field);
  const OpposingPair<S> pair(f, g);
  const auto d = pair_drazin(pair);
  const auto dv = check_pair_drazin(f, g, d.g_over_f, d.f_over_g);
  certify(dv, "pair Drazin inverse");
  if (dv.witnessed_index != d.index) defect("reported pair index is not minimal");
  const auto c = cline(f, g);
  const auto d_fg = check_drazin(g * f, c.fg_D);
  const auto d_gf = check_drazin(f * g, c.gf_D);
  certify(d_fg, "(gf)^D");
  certify(d_gf, "Cline output");

  json out = header("pair", field);
  out["g_over_f"] = io::matrix_to_json(d.g_over_f);
  out["f_over_g"] = io::matrix_to_json(d.f_over_g);
  out["index"] = d.index;
  out["index_fg"] = d.index_fg;
  out["index_gf"] = d.index_gf;
  out["idem_fg"] = io::matrix_to_json(d.idem_fg);
  out["idem_gf"] = io::matrix_to_json(d.idem_gf);
  out["group"] = check_pair_group(pair, d);
  out["binary_idempotent"] = check_binary_idempotent(pair);
  out["cline"] = json{{"fg_D", io::matrix_to_json(c.fg_D)}, {"gf_D", io::matrix_to_json(c.gf_D)}};
  json axioms = json::array({io::report_to_json(dv)});
  if (d.index <= 1) axioms.push_back(io::report_to_json(check_pair_group(f, g, d.g_over_f, d.f_over_g)));
  axioms.push_back(io::report_to_json(d_fg));
  axioms.push_back(io::report_to_json(d_gf));
  out["axioms"] = std::move(axioms);
  return out;
}

json cmd_endofun(const Request& r, Payloads& payloads) {
  const auto f = io::endofun_from_json(payloads.get(r.table, "table"));
  const auto image = eventual_image(f);
  const auto d = endo_drazin(f);
  const TransformationMonoid monoid(f.size());
  const auto report = check_drazin_in(monoid, f, d.inverse, f.size());
  certify(report, "endofunction Drazin inverse");
  if (report.witnessed_index != d.index) defect("endofunction index is not minimal");
  const auto cycle = monoid_drazin(monoid, f, r.max_steps.value_or(default_max_steps(monoid)));
  if (!(cycle.inverse == d.inverse)) defect("power-cycle route disagrees with the eventual-image route");

  json out{{"command", "endofun"}};
  out["inverse"] = io::endofun_to_json(d.inverse);
  out["index"] = d.index;
  out["eventual_image"] = image.stable_set;
  out["tail"] = cycle.tail;
  out["period"] = cycle.period;
  out["axioms"] = json::array({io::report_to_json(report)});
  return out;
}

json cmd_monoid(const Request& r) {
  if (!r.modulus || *r.modulus < 1) raise(Errc::parse_error, "--modulus must be a positive integer");
  if (!r.element) raise(Errc::parse_error, "missing --element");
  const ModularMultiplicativeMonoid monoid(static_cast<std::uint64_t>(*r.modulus));
  const auto x = monoid.element(*r.element);
  const auto d = monoid_drazin(monoid, x, r.max_steps.value_or(monoid.order()));
  const auto index = minimal_drazin_index(monoid, x, d.inverse, d.index_bound);
  const auto report = check_drazin_in(monoid, x, d.inverse, d.index_bound);
  certify(report, "monoid Drazin inverse");

  json out{{"command", "monoid"}, {"modulus", *r.modulus}, {"element", x}};
  out["inverse"] = d.inverse;
  out["index"] = index;
  out["index_bound"] = d.index_bound;
  out["tail"] = d.tail;
  out["period"] = d.period;
  out["axioms"] = json::array({io::report_to_json(report)});
  return out;
}

template <ExactScalar S>
json cmd_decompose(const Request& r, Payloads& payloads, const FieldDescriptor& field) {
  const auto x = read_matrix<S>(payloads, r.matrix, "matrix", field);
  x.require_square("decompose");
  const auto d = drazin_inverse(x);
  const auto dr = check_drazin(x, d.inverse);
  certify(dr, "Drazin inverse");
  const auto cn = core_nilpotent(x, d);
  const auto cnd = check_core_nilpotent(x, cn.core, cn.nilpotent_part);
  certify(cnd, "core-nilpotent decomposition");
  const auto fit = fitting_decomposition(x, d);
  const auto iso = splitting_iso(x, d);
  const auto family = r.window ? eventuating_family(x, d, *r.window) : eventuating_family(x, d);
  const auto ev = check_eventuating(x, family);
  certify(ev, "eventuating family");
  const bool complement = complement_formula_check(x, d);
  const bool munn = munn_power_iso_check(x, d);
  if (!complement) defect("complement formula fails");
  if (!munn) defect("x^{k+1} is not an automorphism of the split idempotent");

  json out = header("decompose", field);
  out["drazin"] = io::drazin_data_to_json(d);
  out["core_nilpotent"] = json{{"core", io::matrix_to_json(cn.core)},
                               {"nilpotent", io::matrix_to_json(cn.nilpotent_part)},
                               {"nilpotent_index", cn.nilpotent_index}};
  out["fitting"] = json{{"change_of_basis", io::matrix_to_json(fit.change_of_basis)},
                        {"invertible_block", io::matrix_to_json(fit.invertible_block)},
                        {"nilpotent_block", io::matrix_to_json(fit.nilpotent_block)}};
  out["splitting"] = json{{"retraction", io::matrix_to_json(iso.splitting.retraction)},
                          {"section", io::matrix_to_json(iso.splitting.section)},
                          {"alpha", io::matrix_to_json(iso.alpha)},
                          {"alpha_inverse", io::matrix_to_json(iso.alpha_inverse)}};
  json sections = json::array();
  json retractions = json::array();
  for (const auto& s : family.sections) sections.push_back(io::matrix_to_json(s));
  for (const auto& rr : family.retractions) retractions.push_back(io::matrix_to_json(rr));
  out["eventuating"] = json{{"window", family.window}, {"sections", sections}, {"retractions", retractions}};
  out["complement_formula"] = complement;
  out["munn_power_iso"] = munn;
  out["axioms"] = json::array({io::report_to_json(dr), io::report_to_json(cnd), io::report_to_json(ev)});
  return out;
}

template <ExactScalar S>
json cmd_verify(const Request& r, Payloads& payloads, const FieldDescriptor& field, bool& passed) {
  AxiomReport report{AxiomSystem::D};
  const std::string& sys = r.system;
  if (sys == "D" || sys == "G" || sys == "MP") {
    const auto x = read_matrix<S>(payloads, r.matrix, "matrix", field);
    const auto c = read_matrix<S>(payloads, r.inverse, "inverse", field);
    const auto system = sys == "D" ? AxiomSystem::D : sys == "G" ? AxiomSystem::G : AxiomSystem::MP;
    AxiomSubject<S> subject = system == AxiomSystem::MP
                                  ? AxiomSubject<S>(MoorePenroseSubject<S>{x, c})
                                  : AxiomSubject<S>(EndomorphismSubject<S>{x, c});
    report = check_axioms(system, subject);
  } else if (sys == "DV" || sys == "GV") {
    PairSubject<S> subject{read_matrix<S>(payloads, r.f, "f", field), read_matrix<S>(payloads, r.g, "g", field),
                           read_matrix<S>(payloads, r.g_over_f, "g-over-f", field),
                           read_matrix<S>(payloads, r.f_over_g, "f-over-g", field)};
    report = check_axioms(sys == "DV" ? AxiomSystem::DV : AxiomSystem::GV, AxiomSubject<S>(std::move(subject)));
  } else {
    raise(Errc::parse_error, "unknown --system '" + sys + "' (expected D, G, MP, DV or GV)");
  }
  passed = report.passed;
  json out = header("verify", field);
  out["system"] = sys;
  out["passed"] = report.passed;
  out["axioms"] = json::array({io::report_to_json(report)});
  return out;
}

template <ExactScalar S>
json dispatch(const Request& r, Payloads& payloads, const FieldDescriptor& field, bool& passed) {
  if (r.command == "drazin") return cmd_drazin<S>(r, payloads, field);
  if (r.command == "group") return cmd_group<S>(r, payloads, field);
  if (r.command == "mp") return cmd_mp<S>(r, payloads, field);
  if (r.command == "pair") return cmd_pair<S>(r, payloads, field);
  if (r.command == "decompose") return cmd_decompose<S>(r, payloads, field);
  if (r.command == "verify") return cmd_verify<S>(r, payloads, field, passed);
  raise(Errc::parse_error, "unknown command '" + r.command + "'");
}

}  // namespace

Response run(const Request& request, std::istream& in) {
  Response response;
  try {
    Payloads payloads(in);
    bool passed = true;
    json out;
    if (request.command == "endofun") {
      out = cmd_endofun(request, payloads);
    } else if (request.command == "monoid") {
      out = cmd_monoid(request);
    } else {
      const auto field = resolve_field(request);
      out = field.is_rational() ? dispatch<Rational>(request, payloads, field, passed)
                                : dispatch<Residue>(request, payloads, field, passed);
    }
    response.out = request.pretty ? render_pretty(out) : out.dump() + "\n";
    if (!passed) {
      response.exit_code = kExitUserError;
      response.err = "verify: the claimed object fails the axioms\n";
    }
  } catch (const Error& e) {
    response.exit_code = e.code() == Errc::internal_inconsistency ? kExitInternal : kExitUserError;
    response.err = std::string("error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    response.exit_code = kExitInternal;
    response.err = std::string("error: unexpected failure: ") + e.what() + "\n";
  }
  return response;
}

Response run_args(const std::vector<std::string>& argv, std::istream& in) {
  Request req;
  CLI::App app{"Exact Drazin, group and Moore-Penrose inverses over Q and F_p"};
  app.require_subcommand(1);

  auto field_opts = [&req](CLI::App* sub) {
    sub->add_option("--field", req.field, "Q or Fp")->check(CLI::IsMember({"Q", "Fp"}));
    sub->add_option("--p", req.p, "prime modulus for --field Fp");
    sub->add_flag("--pretty", req.pretty, "aligned text instead of JSON");
  };
  auto matrix_opt = [&req](CLI::App* sub, const char* help) {
    sub->add_option("--matrix", req.matrix, help)->required();
  };

  auto* drazin = app.add_subcommand("drazin", "Drazin inverse, index and induced idempotent");
  field_opts(drazin);
  matrix_opt(drazin, "square matrix as JSON, or - for stdin");
  drazin->add_option("--route", req.route, "A (rank factorization), B (image-kernel) or C (power cycle, Fp only)");
  drazin->add_option("--max-steps", req.max_steps, "power-cycle search limit for route C");

  auto* group = app.add_subcommand("group", "group inverse, when the index is at most 1");
  field_opts(group);
  matrix_opt(group, "square matrix as JSON, or - for stdin");

  auto* mp = app.add_subcommand("mp", "Moore-Penrose inverse with transpose as the dagger");
  field_opts(mp);
  matrix_opt(mp, "matrix as JSON, or - for stdin");

  auto* pair = app.add_subcommand("pair", "Drazin inverse of an opposing pair f: n x m, g: m x n");
  field_opts(pair);
  pair->add_option("--f", req.f, "forward map as JSON")->required();
  pair->add_option("--g", req.g, "backward map as JSON")->required();

  auto* endofun = app.add_subcommand("endofun", "Drazin inverse of a function on {0..n-1}");
  endofun->add_option("--table", req.table, "image table as JSON, e.g. [1,2,1]")->required();
  endofun->add_option("--max-steps", req.max_steps, "power-cycle search limit");
  endofun->add_flag("--pretty", req.pretty, "aligned text instead of JSON");

  auto* monoid = app.add_subcommand("monoid", "Drazin inverse in the multiplicative monoid Z/n");
  monoid->add_option("--modulus", req.modulus, "n")->required();
  monoid->add_option("--element", req.element, "element of Z/n")->required();
  monoid->add_option("--max-steps", req.max_steps, "power-cycle search limit");
  monoid->add_flag("--pretty", req.pretty, "aligned text instead of JSON");

  auto* decompose = app.add_subcommand("decompose", "core-nilpotent, Fitting and splitting data");
  field_opts(decompose);
  matrix_opt(decompose, "square matrix as JSON, or - for stdin");
  decompose->add_option("--window", req.window, "eventuating family window N (default index + 2)");

  auto* verify = app.add_subcommand("verify", "check a claimed inverse without computing one");
  field_opts(verify);
  verify->add_option("--system", req.system, "D, G, MP, DV or GV")
      ->check(CLI::IsMember({"D", "G", "MP", "DV", "GV"}));
  verify->add_option("--matrix", req.matrix, "x (D, G) or f (MP)");
  verify->add_option("--inverse", req.inverse, "claimed inverse (D, G) or pseudo-inverse (MP)");
  verify->add_option("--f", req.f, "forward map (DV, GV)");
  verify->add_option("--g", req.g, "backward map (DV, GV)");
  verify->add_option("--g-over-f", req.g_over_f, "claimed g^{D/f} (DV, GV)");
  verify->add_option("--f-over-g", req.f_over_g, "claimed f^{D/g} (DV, GV)");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    return Response{code == 0 ? kExitOk : kExitUserError, out.str(), err.str()};
  }
  req.command = app.get_subcommands().front()->get_name();
  return run(req, in);
}

}  // namespace drazin::cli
