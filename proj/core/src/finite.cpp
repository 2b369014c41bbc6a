#include "drazin/finite.hpp"

#include <algorithm>
#include <string>

#include "drazin/linalg.hpp"

namespace drazin {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) return cap;
    result *= base;
  }
  return result;
}

}  // namespace

EndoFun::EndoFun(std::vector<std::size_t> table) : table_(std::move(table)) {
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= table_.size()) {
      raise(Errc::shape_mismatch, "target " + std::to_string(table_[i]) + " at position " + std::to_string(i) +
                                      " is outside {0.." + std::to_string(table_.size()) + "}");
    }
  }
}

EndoFun EndoFun::identity(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return EndoFun(std::move(t));
}

EndoFun EndoFun::after(const EndoFun& g) const {
  if (g.size() != size()) raise(Errc::shape_mismatch, "composing endofunctions of different sizes");
  std::vector<std::size_t> t(size());
  for (std::size_t i = 0; i < size(); ++i) t[i] = table_[g.table_[i]];
  EndoFun out;
  out.table_ = std::move(t);
  return out;
}

std::size_t EndoFun::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : table_) h = (h ^ v) * 0x100000001b3ULL;
  return h;
}

std::uint64_t TransformationMonoid::order() const noexcept { return saturating_pow(n_, n_); }

EndoFun TransformationMonoid::multiply(const EndoFun& f, const EndoFun& g) const { return f.after(g); }

EventualImage eventual_image(const EndoFun& f) {
  const std::size_t n = f.size();
  std::vector<char> in_image(n, 1);
  std::size_t count = n;
  for (std::size_t k = 0;; ++k) {
    std::vector<char> next(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (in_image[i]) next[f(i)] = 1;
    }
    const auto next_count = static_cast<std::size_t>(std::count(next.begin(), next.end(), 1));
    if (next_count == count) {
      EventualImage out{{}, k};
      for (std::size_t i = 0; i < n; ++i) {
        if (in_image[i]) out.stable_set.push_back(i);
      }
      return out;
    }
    in_image = std::move(next);
    count = next_count;
  }
}

EndoDrazin endo_drazin(const EndoFun& f) {
  const auto image = eventual_image(f);
  const std::size_t n = f.size();
  std::vector<std::size_t> restricted_inverse(n, n);
  for (auto y : image.stable_set) {
    if (restricted_inverse[f(y)] != n) raise(Errc::internal_inconsistency, "f is not injective on its eventual image");
    restricted_inverse[f(y)] = y;
  }
  std::vector<std::size_t> table(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = i;
    for (std::size_t j = 0; j < image.index; ++j) v = f(v);
    for (std::size_t j = 0; j <= image.index; ++j) v = restricted_inverse[v];
    table[i] = v;
  }
  return EndoDrazin{EndoFun(std::move(table)), image.index};
}

std::uint64_t default_max_steps(const MatrixMonoid<Residue>& monoid) {
  const std::uint64_t n = monoid.dimension();
  const std::uint64_t bound = saturating_pow(monoid.field().modulus(), n);
  return bound > std::numeric_limits<std::uint64_t>::max() - n ? bound : bound + n;
}

std::uint64_t default_max_steps(const TransformationMonoid& monoid) { return monoid.order(); }

DrazinData<Residue> monoid_cycle_drazin(const Matrix<Residue>& x, std::uint64_t max_steps) {
  x.require_square("monoid_cycle_drazin");
  const MatrixMonoid<Residue> monoid(x.rows(), x.field());
  auto result = monoid_drazin(monoid, x, max_steps);
  const auto index = minimal_drazin_index(monoid, x, result.inverse, result.index_bound);
  Matrix<Residue> idempotent = x * result.inverse;
  return DrazinData<Residue>{std::move(result.inverse), static_cast<std::size_t>(index), std::move(idempotent),
                             Route::monoid_cycle};
}

DrazinData<Residue> monoid_cycle_drazin(const Matrix<Residue>& x) {
  x.require_square("monoid_cycle_drazin");
  return monoid_cycle_drazin(x, default_max_steps(MatrixMonoid<Residue>(x.rows(), x.field())));
}

}  // namespace drazin
