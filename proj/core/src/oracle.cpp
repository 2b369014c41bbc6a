#include "drazin/oracle.hpp"

#include <type_traits>

#include "drazin/decomp.hpp"

namespace drazin {

namespace {

std::uint64_t checked_count(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && total > kMaxEnumeration / base) {
      raise(Errc::enumeration_too_large, "more than " + std::to_string(kMaxEnumeration) + " elements");
    }
    total *= base;
  }
  return total;
}

}  // namespace

std::vector<Matrix<Residue>> all_matrices(std::size_t n, const FieldDescriptor& field) {
  const std::uint64_t p = field.modulus();
  if (field.is_rational()) raise(Errc::enumeration_too_large, "Q is infinite");
  const std::uint64_t total = checked_count(p, n * n);
  std::vector<Matrix<Residue>> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    Matrix<Residue> m(n, n, field);
    std::uint64_t c = code;
    for (std::size_t idx = n * n; idx-- > 0;) {
      m(idx / n, idx % n) = Residue(static_cast<long long>(c % p), field);
      c /= p;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<EndoFun> all_endofunctions(std::size_t n) {
  const std::uint64_t total = checked_count(n, n);
  std::vector<EndoFun> out;
  out.reserve(total);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<std::size_t> table(n);
    std::uint64_t c = code;
    for (std::size_t i = n; i-- > 0;) {
      table[i] = static_cast<std::size_t>(c % n);
      c /= n;
    }
    out.emplace_back(std::move(table));
  }
  return out;
}

template <ExactScalar S>
RouteAudit<S> cross_route_audit(const Matrix<S>& x) {
  RouteAudit<S> audit{{}, true, true, {}};
  audit.results.push_back(drazin_inverse(x));
  audit.results.push_back(image_kernel_drazin(x));
  if constexpr (std::is_same_v<S, Residue>) audit.results.push_back(monoid_cycle_drazin(x));
  const auto& first = audit.results.front();
  for (std::size_t i = 1; i < audit.results.size(); ++i) {
    const auto& other = audit.results[i];
    const std::string pair = std::string(to_string(first.route)) + " vs " + std::string(to_string(other.route));
    if (!(other.inverse == first.inverse)) {
      audit.inverses_agree = false;
      audit.disagreements.push_back("inverse: " + pair);
    }
    if (other.index != first.index) {
      audit.indices_agree = false;
      audit.disagreements.push_back("index: " + pair);
    }
  }
  return audit;
}

template RouteAudit<Rational> cross_route_audit(const Matrix<Rational>&);
template RouteAudit<Residue> cross_route_audit(const Matrix<Residue>&);

}  // namespace drazin
