#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drazin/axioms.hpp"
#include "drazin/drazin.hpp"
#include "drazin/finite.hpp"
#include "drazin/monoid.hpp"

namespace drazin {

inline constexpr std::size_t kMaxEnumeration = 1'000'000;

/// The unique candidate satisfying [D.1-3] for x, or nullopt.
/// Errc::enumeration_too_large above kMaxEnumeration candidates and
/// Errc::internal_inconsistency if two distinct candidates survive.
template <FiniteMonoid M>
std::optional<typename M::element_type> brute_force_drazin(const M& monoid, const typename M::element_type& x,
                                                           std::span<const typename M::element_type> candidates,
                                                           std::size_t index_cap) {
  if (candidates.size() > kMaxEnumeration) {
    raise(Errc::enumeration_too_large, std::to_string(candidates.size()) + " candidates");
  }
  std::optional<typename M::element_type> found;
  for (const auto& c : candidates) {
    if (!check_drazin_in(monoid, x, c, index_cap).passed) continue;
    if (found && !monoid.equal(*found, c)) raise(Errc::internal_inconsistency, "two distinct Drazin inverses");
    found = c;
  }
  return found;
}

/// Every n x n matrix over F_p, in lexicographic order of row-major entries.
std::vector<Matrix<Residue>> all_matrices(std::size_t n, const FieldDescriptor& field);

/// Every endofunction of an n-point set.
std::vector<EndoFun> all_endofunctions(std::size_t n);

template <ExactScalar S>
struct RouteAudit {
  std::vector<DrazinData<S>> results;  // A, B, then C when available
  bool inverses_agree;
  bool indices_agree;
  std::vector<std::string> disagreements;

  bool ok() const { return inverses_agree && indices_agree; }
};

/// Runs every route available for the field and compares them entrywise.
template <ExactScalar S>
RouteAudit<S> cross_route_audit(const Matrix<S>& x);

}  // namespace drazin
