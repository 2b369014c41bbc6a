#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "drazin/decomp.hpp"
#include "drazin/matrix.hpp"
#include "drazin/monoid.hpp"

namespace drazin {

enum class AxiomSystem { D, G, DV, GV, MP, CND, EV };

std::string_view to_string(AxiomSystem system) noexcept;

/// Outcome of evaluating one labelled axiom list by exact equality.
/// `witnessed_index` is only set for D and DV, and only when [D.1]/[DV.1]
/// holds for some k within the dimension bound.
struct AxiomReport {
  explicit AxiomReport(AxiomSystem s) : system(s) {}

  AxiomSystem system;
  bool passed = true;
  std::vector<std::string> failed_axioms;
  std::optional<std::size_t> witnessed_index;

  void fail(std::string label) {
    passed = false;
    failed_axioms.push_back(std::move(label));
  }
};

/// [D.1]-[D.3] in an arbitrary monoid; the index search stops at index_cap.
template <FiniteMonoid M>
AxiomReport check_drazin_in(const M& monoid, const typename M::element_type& x,
                            const typename M::element_type& candidate, std::size_t index_cap) {
  AxiomReport report{AxiomSystem::D};
  auto xk = monoid.identity();
  for (std::size_t k = 0; k <= index_cap; ++k) {
    auto next = monoid.multiply(xk, x);
    if (monoid.equal(monoid.multiply(next, candidate), xk)) {
      report.witnessed_index = k;
      break;
    }
    xk = std::move(next);
  }
  if (!report.witnessed_index) report.fail("D.1");
  if (!monoid.equal(monoid.multiply(monoid.multiply(candidate, x), candidate), candidate)) report.fail("D.2");
  if (!monoid.equal(monoid.multiply(x, candidate), monoid.multiply(candidate, x))) report.fail("D.3");
  return report;
}

// Matrix checkers. Products follow the applicative convention; see
// docs/conventions.md for how each labelled axiom is transcribed.
// All of them throw Errc::shape_mismatch for incompatible shapes.

template <ExactScalar S>
AxiomReport check_drazin(const Matrix<S>& x, const Matrix<S>& candidate);

template <ExactScalar S>
AxiomReport check_group(const Matrix<S>& x, const Matrix<S>& candidate);

/// f: n x m, g: m x n, g_over_f: n x m, f_over_g: m x n.
template <ExactScalar S>
AxiomReport check_pair_drazin(const Matrix<S>& f, const Matrix<S>& g, const Matrix<S>& g_over_f,
                              const Matrix<S>& f_over_g);

template <ExactScalar S>
AxiomReport check_pair_group(const Matrix<S>& f, const Matrix<S>& g, const Matrix<S>& g_over_f,
                             const Matrix<S>& f_over_g);

/// Transpose is the dagger.
template <ExactScalar S>
AxiomReport check_moore_penrose(const Matrix<S>& f, const Matrix<S>& pseudo);

template <ExactScalar S>
AxiomReport check_core_nilpotent(const Matrix<S>& x, const Matrix<S>& core, const Matrix<S>& nilpotent);

template <ExactScalar S>
AxiomReport check_eventuating(const Matrix<S>& x, const EventuatingFamily<S>& family);

template <ExactScalar S>
struct EndomorphismSubject {
  Matrix<S> x;
  Matrix<S> candidate;
};

template <ExactScalar S>
struct PairSubject {
  Matrix<S> forward;
  Matrix<S> backward;
  Matrix<S> g_over_f;
  Matrix<S> f_over_g;
};

template <ExactScalar S>
struct MoorePenroseSubject {
  Matrix<S> f;
  Matrix<S> pseudo;
};

template <ExactScalar S>
struct CoreNilpotentSubject {
  Matrix<S> x;
  Matrix<S> core;
  Matrix<S> nilpotent;
};

template <ExactScalar S>
struct EventuatingSubject {
  Matrix<S> x;
  EventuatingFamily<S> family;
};

template <ExactScalar S>
using AxiomSubject = std::variant<EndomorphismSubject<S>, PairSubject<S>, MoorePenroseSubject<S>,
                                  CoreNilpotentSubject<S>, EventuatingSubject<S>>;

/// Uniform entry point. D and G take an EndomorphismSubject, DV and GV a
/// PairSubject, and so on; any other pairing is Errc::shape_mismatch.
template <ExactScalar S>
AxiomReport check_axioms(AxiomSystem system, const AxiomSubject<S>& subject);

}  // namespace drazin
