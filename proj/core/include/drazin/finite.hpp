#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/monoid.hpp"

namespace drazin {

/// Total function on {0, ..., n-1} given by its image table.
class EndoFun {
 public:
  EndoFun() = default;
  /// Errc::shape_mismatch if some target is out of range.
  explicit EndoFun(std::vector<std::size_t> table);

  static EndoFun identity(std::size_t n);

  std::size_t size() const noexcept { return table_.size(); }
  std::size_t operator()(std::size_t i) const { return table_[i]; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  /// (*this o g)(i) = (*this)(g(i)).
  EndoFun after(const EndoFun& g) const;

  std::size_t hash() const noexcept;
  bool operator==(const EndoFun&) const = default;

 private:
  std::vector<std::size_t> table_;
};

/// All endofunctions of an n-point set under composition; multiply(f, g) = f o g.
class TransformationMonoid {
 public:
  using element_type = EndoFun;

  explicit TransformationMonoid(std::size_t n) : n_(n) {}

  std::size_t points() const noexcept { return n_; }
  /// n^n, saturating.
  std::uint64_t order() const noexcept;

  EndoFun identity() const { return EndoFun::identity(n_); }
  EndoFun multiply(const EndoFun& f, const EndoFun& g) const;
  bool equal(const EndoFun& f, const EndoFun& g) const { return f == g; }
  std::size_t hash(const EndoFun& f) const noexcept { return f.hash(); }

 private:
  std::size_t n_;
};

struct EventualImage {
  std::vector<std::size_t> stable_set;  // sorted
  std::size_t index;
};

EventualImage eventual_image(const EndoFun& f);

struct EndoDrazin {
  EndoFun inverse;
  std::size_t index;
};

/// With g = f restricted to im(f^k), a permutation,
/// f^D(i) = g^{-(k+1)}(f^k(i)).
EndoDrazin endo_drazin(const EndoFun& f);

/// x^0, ..., x^{tail + period - 1}, with x^{tail} = x^{tail + period} the
/// first repetition.
template <FiniteMonoid M>
struct PowerCycle {
  std::vector<typename M::element_type> powers;
  std::size_t tail;
  std::size_t period;

  const typename M::element_type& power(std::uint64_t e) const {
    if (e < powers.size()) return powers[e];
    return powers[tail + (e - tail) % period];
  }
};

/// Errc::cycle_not_found if x^a = x^{a+c} needs a + c > max_steps.
template <FiniteMonoid M>
PowerCycle<M> find_power_cycle(const M& monoid, const typename M::element_type& x, std::uint64_t max_steps) {
  PowerCycle<M> cycle{{}, 0, 0};
  std::unordered_multimap<std::size_t, std::size_t> seen;
  auto current = monoid.identity();
  for (std::uint64_t step = 0; step <= max_steps; ++step) {
    const std::size_t h = monoid.hash(current);
    auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (monoid.equal(cycle.powers[it->second], current)) {
        cycle.tail = it->second;
        cycle.period = cycle.powers.size() - it->second;
        return cycle;
      }
    }
    seen.emplace(h, cycle.powers.size());
    auto next = monoid.multiply(current, x);
    cycle.powers.push_back(std::move(current));
    current = std::move(next);
  }
  raise(Errc::cycle_not_found, "no repeated power within " + std::to_string(max_steps) + " steps");
}

template <FiniteMonoid M>
struct MonoidDrazin {
  typename M::element_type inverse;
  std::uint64_t index_bound;
  std::size_t tail;
  std::size_t period;
};

/// With x^m = x^{m+k} the first repetition:
///   m = 0:          x^D = x^{k-1}, bound 0
///   k = 1:          x^D = x^m,     bound m
///   m >= 1, k >= 2: x^D = x^{mk-1}, bound mk
template <FiniteMonoid M>
MonoidDrazin<M> monoid_drazin(const M& monoid, const typename M::element_type& x, std::uint64_t max_steps) {
  auto cycle = find_power_cycle(monoid, x, max_steps);
  const std::uint64_t m = cycle.tail;
  const std::uint64_t k = cycle.period;
  std::uint64_t exponent = 0;
  std::uint64_t bound = 0;
  if (m == 0) {
    exponent = k - 1;
  } else if (k == 1) {
    exponent = m;
    bound = m;
  } else {
    exponent = m * k - 1;
    bound = m * k;
  }
  return MonoidDrazin<M>{cycle.power(exponent), bound, cycle.tail, cycle.period};
}

/// Least k <= bound with x^{k+1} x^D = x^k. The set of valid k is upward
/// closed, so this scans upward from 0; Errc::internal_inconsistency if
/// `bound` itself fails.
template <FiniteMonoid M>
std::uint64_t minimal_drazin_index(const M& monoid, const typename M::element_type& x,
                                   const typename M::element_type& xd, std::uint64_t bound) {
  auto xk = monoid.identity();
  for (std::uint64_t k = 0; k <= bound; ++k) {
    auto next = monoid.multiply(xk, x);
    if (monoid.equal(monoid.multiply(next, xd), xk)) return k;
    xk = std::move(next);
  }
  raise(Errc::internal_inconsistency, "[D.1] fails at the proven index bound");
}

/// n + p^n, saturating: the tail of a matrix power sequence is at most n and
/// an element of GL(n, p) has order below p^n.
std::uint64_t default_max_steps(const MatrixMonoid<Residue>& monoid);

/// n^n, saturating.
std::uint64_t default_max_steps(const TransformationMonoid& monoid);

/// Route C for matrices over F_p, with the minimal index recovered.
DrazinData<Residue> monoid_cycle_drazin(const Matrix<Residue>& x);
DrazinData<Residue> monoid_cycle_drazin(const Matrix<Residue>& x, std::uint64_t max_steps);

}  // namespace drazin
