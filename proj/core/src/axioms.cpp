#include "drazin/axioms.hpp"

#include <string>
#include <type_traits>

#include "drazin/errors.hpp"
#include "drazin/linalg.hpp"

namespace drazin {

std::string_view to_string(AxiomSystem system) noexcept {
  switch (system) {
    case AxiomSystem::D: return "D";
    case AxiomSystem::G: return "G";
    case AxiomSystem::DV: return "DV";
    case AxiomSystem::GV: return "GV";
    case AxiomSystem::MP: return "MP";
    case AxiomSystem::CND: return "CND";
    case AxiomSystem::EV: return "EV";
  }
  return "unknown";
}

namespace {

template <ExactScalar S>
void require_shape(const Matrix<S>& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols) {
    raise(Errc::shape_mismatch, std::string(what) + " has shape " + m.shape_string() + ", expected " +
                                    std::to_string(rows) + "x" + std::to_string(cols));
  }
}

template <ExactScalar S>
void require_endomorphism_pair(const Matrix<S>& x, const Matrix<S>& other, const char* what) {
  if (!x.is_square()) raise(Errc::shape_mismatch, "x must be square");
  require_shape(other, x.rows(), x.cols(), what);
  x.require_same_field(other);
}

template <ExactScalar S>
bool symmetric(const Matrix<S>& m) {
  return m == m.transpose();
}

// Minimal k in [0, cap] with lhs * power^k == power^k, where `lhs` is the
// idempotent-like prefix of the [DV.1] equation.
template <ExactScalar S>
std::optional<std::size_t> first_absorbing_power(const Matrix<S>& lhs, const Matrix<S>& base, std::size_t cap) {
  Matrix<S> power = Matrix<S>::identity(base.rows(), base.field());
  for (std::size_t k = 0; k <= cap; ++k) {
    if (lhs * power == power) return k;
    power = power * base;
  }
  return std::nullopt;
}

template <ExactScalar S>
void require_pair_shapes(const Matrix<S>& f, const Matrix<S>& g, const Matrix<S>& g_over_f,
                         const Matrix<S>& f_over_g) {
  require_shape(g, f.cols(), f.rows(), "g");
  require_shape(g_over_f, f.rows(), f.cols(), "g^{D/f}");
  require_shape(f_over_g, f.cols(), f.rows(), "f^{D/g}");
  f.require_same_field(g);
  f.require_same_field(g_over_f);
  f.require_same_field(f_over_g);
}

// [DV.2] and [DV.3] are shared verbatim by [GV.2] and [GV.3].
template <ExactScalar S>
void check_pair_tail(AxiomReport& report, const char* prefix, const Matrix<S>& f, const Matrix<S>& g,
                     const Matrix<S>& gdf, const Matrix<S>& fdg) {
  const std::string p(prefix);
  if (!(fdg * f * fdg == fdg) || !(gdf * g * gdf == gdf)) report.fail(p + ".2");
  if (!(fdg * f == g * gdf) || !(f * fdg == gdf * g)) report.fail(p + ".3");
}

}  // namespace

template <ExactScalar S>
AxiomReport check_drazin(const Matrix<S>& x, const Matrix<S>& candidate) {
  require_endomorphism_pair(x, candidate, "x^D");
  return check_drazin_in(MatrixMonoid<S>(x.rows(), x.field()), x, candidate, x.rows());
}

template <ExactScalar S>
AxiomReport check_group(const Matrix<S>& x, const Matrix<S>& candidate) {
  require_endomorphism_pair(x, candidate, "x^#");
  AxiomReport report{AxiomSystem::G};
  if (!(x * candidate * x == x)) report.fail("G.1");
  if (!(candidate * x * candidate == candidate)) report.fail("G.2");
  if (!(x * candidate == candidate * x)) report.fail("G.3");
  return report;
}

template <ExactScalar S>
AxiomReport check_pair_drazin(const Matrix<S>& f, const Matrix<S>& g, const Matrix<S>& g_over_f,
                              const Matrix<S>& f_over_g) {
  require_pair_shapes(f, g, g_over_f, f_over_g);
  AxiomReport report{AxiomSystem::DV};
  const std::size_t cap = std::max(f.rows(), f.cols());
  // (fg)^k f f^{D/g} = (fg)^k  and  (gf)^k g g^{D/f} = (gf)^k.
  auto p = first_absorbing_power(f_over_g * f, g * f, cap);
  auto q = first_absorbing_power(g_over_f * g, f * g, cap);
  if (p && q) {
    report.witnessed_index = std::max(*p, *q);
  } else {
    report.fail("DV.1");
  }
  check_pair_tail(report, "DV", f, g, g_over_f, f_over_g);
  return report;
}

template <ExactScalar S>
AxiomReport check_pair_group(const Matrix<S>& f, const Matrix<S>& g, const Matrix<S>& g_over_f,
                             const Matrix<S>& f_over_g) {
  require_pair_shapes(f, g, g_over_f, f_over_g);
  AxiomReport report{AxiomSystem::GV};
  // fg g^{D/f} g = fg  and  gf f^{D/g} f = gf.
  const Matrix<S> fg = g * f;
  const Matrix<S> gf = f * g;
  if (!(g * g_over_f * fg == fg) || !(f * f_over_g * gf == gf)) report.fail("GV.1");
  check_pair_tail(report, "GV", f, g, g_over_f, f_over_g);
  return report;
}

template <ExactScalar S>
AxiomReport check_moore_penrose(const Matrix<S>& f, const Matrix<S>& pseudo) {
  require_shape(pseudo, f.cols(), f.rows(), "f°");
  f.require_same_field(pseudo);
  AxiomReport report{AxiomSystem::MP};
  if (!(f * pseudo * f == f)) report.fail("MP.1");
  if (!(pseudo * f * pseudo == pseudo)) report.fail("MP.2");
  if (!symmetric(pseudo * f)) report.fail("MP.3");
  if (!symmetric(f * pseudo)) report.fail("MP.4");
  return report;
}

template <ExactScalar S>
AxiomReport check_core_nilpotent(const Matrix<S>& x, const Matrix<S>& core, const Matrix<S>& nilpotent) {
  require_endomorphism_pair(x, core, "core");
  require_endomorphism_pair(x, nilpotent, "nilpotent part");
  AxiomReport report{AxiomSystem::CND};
  if (rank(core) != rank(core * core)) report.fail("CND.1");
  if (!nilpotent.pow(x.rows()).is_zero()) report.fail("CND.2");
  if (!(core * nilpotent).is_zero() || !(nilpotent * core).is_zero()) report.fail("CND.3");
  if (!(core + nilpotent == x)) report.fail("CND.4");
  return report;
}

template <ExactScalar S>
AxiomReport check_eventuating(const Matrix<S>& x, const EventuatingFamily<S>& family) {
  if (!x.is_square()) raise(Errc::shape_mismatch, "x must be square");
  const std::size_t count = 2 * family.window + 1;
  if (family.sections.size() != count || family.retractions.size() != count) {
    raise(Errc::shape_mismatch, "eventuating family does not cover its window");
  }
  const std::size_t n = x.rows();
  const std::size_t e = family.sections.front().cols();
  for (std::size_t i = 0; i < count; ++i) {
    require_shape(family.sections[i], n, e, "s_i");
    require_shape(family.retractions[i], e, n, "r_i");
  }

  AxiomReport report{AxiomSystem::EV};
  const auto w = static_cast<std::ptrdiff_t>(family.window);
  const Matrix<S> identity_e = Matrix<S>::identity(e, x.field());
  const Matrix<S> top = x.pow(family.index + 1);
  const Matrix<S> idem0 = family.section(-w) * family.retraction(-w);
  bool ev1 = true, ev2 = true, ev3 = true, ev4 = true;
  for (std::ptrdiff_t i = -w; i <= w; ++i) {
    const auto& s = family.section(i);
    const auto& r = family.retraction(i);
    if (!(r * s == identity_e)) ev1 = false;
    const Matrix<S> idem = s * r;
    if (!(idem == idem0)) ev2 = false;
    if (i < w && (!(x * s == family.section(i + 1)) || !(family.retraction(i + 1) * x == r))) ev3 = false;
    if (!(top * idem == top) || !(idem * top == top)) ev4 = false;
  }
  if (!ev1) report.fail("ev.1");
  if (!ev2) report.fail("ev.2");
  if (!ev3) report.fail("ev.3");
  if (!ev4) report.fail("ev.4");
  return report;
}

template <ExactScalar S>
AxiomReport check_axioms(AxiomSystem system, const AxiomSubject<S>& subject) {
  auto wrong = [system]() -> AxiomReport {
    raise(Errc::shape_mismatch, "subject does not fit axiom system " + std::string(to_string(system)));
  };
  return std::visit(
      [&](const auto& s) -> AxiomReport {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, EndomorphismSubject<S>>) {
          if (system == AxiomSystem::D) return check_drazin(s.x, s.candidate);
          if (system == AxiomSystem::G) return check_group(s.x, s.candidate);
        } else if constexpr (std::is_same_v<T, PairSubject<S>>) {
          if (system == AxiomSystem::DV) return check_pair_drazin(s.forward, s.backward, s.g_over_f, s.f_over_g);
          if (system == AxiomSystem::GV) return check_pair_group(s.forward, s.backward, s.g_over_f, s.f_over_g);
        } else if constexpr (std::is_same_v<T, MoorePenroseSubject<S>>) {
          if (system == AxiomSystem::MP) return check_moore_penrose(s.f, s.pseudo);
        } else if constexpr (std::is_same_v<T, CoreNilpotentSubject<S>>) {
          if (system == AxiomSystem::CND) return check_core_nilpotent(s.x, s.core, s.nilpotent);
        } else {
          if (system == AxiomSystem::EV) return check_eventuating(s.x, s.family);
        }
        return wrong();
      },
      subject);
}

#define DRAZIN_INSTANTIATE_AXIOMS(S)                                                                        \
  template AxiomReport check_drazin(const Matrix<S>&, const Matrix<S>&);                                    \
  template AxiomReport check_group(const Matrix<S>&, const Matrix<S>&);                                     \
  template AxiomReport check_pair_drazin(const Matrix<S>&, const Matrix<S>&, const Matrix<S>&,             \
                                         const Matrix<S>&);                                                 \
  template AxiomReport check_pair_group(const Matrix<S>&, const Matrix<S>&, const Matrix<S>&,              \
                                        const Matrix<S>&);                                                  \
  template AxiomReport check_moore_penrose(const Matrix<S>&, const Matrix<S>&);                             \
  template AxiomReport check_core_nilpotent(const Matrix<S>&, const Matrix<S>&, const Matrix<S>&);          \
  template AxiomReport check_eventuating(const Matrix<S>&, const EventuatingFamily<S>&);                    \
  template AxiomReport check_axioms(AxiomSystem, const AxiomSubject<S>&);

DRAZIN_INSTANTIATE_AXIOMS(Rational)
DRAZIN_INSTANTIATE_AXIOMS(Residue)

}  // namespace drazin
