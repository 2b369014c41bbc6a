#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "drazin/axioms.hpp"
#include "drazin/decomp.hpp"
#include "drazin/errors.hpp"
#include "drazin/linalg.hpp"
#include "support.hpp"

using namespace drazin;
using namespace testing;

namespace {

template <class S>
void check_splitting(const Matrix<S>& e, const IdempotentSplitting<S>& s) {
  CHECK(s.section * s.retraction == e);
  CHECK(s.retraction * s.section == Matrix<S>::identity(s.through_dim, e.field()));
  CHECK(s.through_dim == rank(e));
}

}  // namespace

TEST_CASE("split_idempotent examples", "[decomp]") {
  const auto id = QMat::identity(3, kQ);
  auto s1 = split_idempotent(id);
  CHECK(s1.through_dim == 3);
  CHECK(s1.section == id);
  CHECK(s1.retraction == id);

  auto s0 = split_idempotent(QMat::zero(3, 3, kQ));
  CHECK(s0.through_dim == 0);
  check_splitting(QMat::zero(3, 3, kQ), s0);

  const auto e = q({{1, 1}, {0, 0}});
  auto s = split_idempotent(e);
  CHECK(s.through_dim == 1);
  CHECK(s.retraction == q({{1, 1}}));
  CHECK(s.section == q({{1}, {0}}));
  check_splitting(e, s);

  try {
    (void)split_idempotent(q({{2, 0}, {0, 0}}));
    FAIL("expected NotIdempotent");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::not_idempotent);
  }
}

TEST_CASE("decomposition preconditions", "[decomp]") {
  const auto x = q({{2, 0}, {0, 0}});
  auto d = drazin_inverse(x);
  d.inverse = x;
  try {
    (void)core_nilpotent(x, d);
    FAIL("expected InvalidDrazinData");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_drazin_data);
  }
  auto d2 = drazin_inverse(x);
  d2.index = 2;
  try {
    (void)splitting_iso(x, d2);
    FAIL("expected InvalidDrazinData");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_drazin_data);
  }
}

TEST_CASE("splitting_iso examples", "[decomp]") {
  const auto inv = q({{2, 1}, {1, 1}});
  auto a = splitting_iso(inv, drazin_inverse(inv));
  CHECK(a.alpha.rows() == 2);
  CHECK(a.alpha * a.alpha_inverse == QMat::identity(2, kQ));

  const auto nil = q({{0, 1}, {0, 0}});
  auto b = splitting_iso(nil, drazin_inverse(nil));
  CHECK(b.alpha.rows() == 0);
  CHECK(b.alpha.cols() == 0);

  const auto x = q({{2, 0}, {0, 0}});
  auto c = splitting_iso(x, drazin_inverse(x));
  CHECK(c.alpha == q({{2}}));
  QMat half(1, 1, kQ);
  half(0, 0) = rat(1, 2);
  CHECK(c.alpha_inverse == half);
  CHECK(c.alpha * c.alpha_inverse == q({{1}}));
}

TEST_CASE("core_nilpotent examples", "[decomp]") {
  const auto inv = q({{2, 1}, {1, 1}});
  auto a = core_nilpotent(inv, drazin_inverse(inv));
  CHECK(a.core == inv);
  CHECK(a.nilpotent_part.is_zero());

  const auto nil = q({{0, 1}, {0, 0}});
  auto b = core_nilpotent(nil, drazin_inverse(nil));
  CHECK(b.core.is_zero());
  CHECK(b.nilpotent_part == nil);
  CHECK(b.nilpotent_index == 2);

  const auto x = q({{2, 1}, {0, 0}});
  REQUIRE(drazin_index(x) == 1);
  auto c = core_nilpotent(x, drazin_inverse(x));
  CHECK(c.core == x);
  CHECK(c.nilpotent_part.is_zero());
  CHECK(check_core_nilpotent(x, c.core, c.nilpotent_part).passed);
  CHECK(check_drazin(x, drazin_inverse(x).inverse).passed);
}

TEST_CASE("complement_formula_check examples", "[decomp]") {
  const auto inv = q({{2, 1}, {1, 1}});
  CHECK(complement_formula_check(inv, drazin_inverse(inv)));
  const auto nil = q({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(complement_formula_check(nil, drazin_inverse(nil)));
  // (x^2 + diag(0,1))^{-1} x = diag(1/4, 1) diag(2, 0) = diag(1/2, 0).
  const auto x = q({{2, 0}, {0, 0}});
  QMat quarter(2, 2, kQ);
  quarter(0, 0) = rat(1, 4);
  quarter(1, 1) = rat(1, 1);
  CHECK(invert_matrix(x * x + q({{0, 0}, {0, 1}})) == quarter);
  CHECK(quarter * x == drazin_inverse(x).inverse);
  CHECK(complement_formula_check(x, drazin_inverse(x)));
}

TEST_CASE("fitting_decomposition examples", "[decomp]") {
  const auto inv = q({{2, 1}, {1, 1}});
  auto a = fitting_decomposition(inv, drazin_inverse(inv));
  CHECK(a.nilpotent_block.rows() == 0);
  CHECK(a.invertible_block.rows() == 2);

  const auto x = q({{3, 0}, {0, 0}});
  auto b = fitting_decomposition(x, drazin_inverse(x));
  CHECK(b.invertible_block == q({{3}}));
  CHECK(b.nilpotent_block == q({{0}}));
  CHECK(b.change_of_basis == QMat::identity(2, kQ));

  const auto nil = q({{0, 1}, {0, 0}});
  auto c = fitting_decomposition(nil, drazin_inverse(nil));
  CHECK(c.invertible_block.rows() == 0);
  CHECK(c.nilpotent_block.rows() == 2);
  CHECK(c.change_of_basis * c.nilpotent_block * c.inverse_change_of_basis == nil);
}

TEST_CASE("eventuating_family examples", "[decomp]") {
  const auto inv = q({{2, 1}, {1, 1}});
  CHECK(check_eventuating(inv, eventuating_family(inv, drazin_inverse(inv), 2)).passed);

  const auto nil = q({{0, 1}, {0, 0}});
  auto fam = eventuating_family(nil, drazin_inverse(nil), 2);
  CHECK(fam.sections.front().cols() == 0);
  CHECK(check_eventuating(nil, fam).passed);

  const auto x = q({{2, 0}, {0, 0}});
  auto f3 = eventuating_family(x, drazin_inverse(x), 3);
  CHECK(f3.sections.size() == 7);
  CHECK(f3.section(2) == q({{4}, {0}}));
  QMat quarter(1, 2, kQ);
  quarter(0, 0) = rat(1, 4);
  CHECK(f3.retraction(2) == quarter);
  CHECK(f3.retraction(-3) == q({{8, 0}}));
  CHECK(check_eventuating(x, f3).passed);

  // Negative control: break one section.
  auto broken = f3;
  broken.sections[1] = broken.sections[1] + broken.sections[1];
  CHECK_FALSE(check_eventuating(x, broken).passed);
}

TEST_CASE("munn_power_iso_check examples", "[decomp]") {
  const auto inv = q({{2, 1}, {1, 1}});
  CHECK(munn_power_iso_check(inv, drazin_inverse(inv)));
  const auto nil = q({{0, 1}, {0, 0}});
  CHECK(munn_power_iso_check(nil, drazin_inverse(nil)));
}

TEMPLATE_TEST_CASE("decomp invariants", "[decomp][property]", Rational, Residue) {
  std::mt19937_64 rng(77);
  const auto field = std::is_same_v<TestType, Rational> ? kQ : fp(5);
  using M = Matrix<TestType>;
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    const std::size_t n = dim(rng);
    const M x = random_matrix<TestType>(rng, n, n, field);
    const auto d = drazin_inverse(x);
    const std::size_t r = rank(d.idempotent);
    const M id = M::identity(n, field);

    REQUIRE(r + rank(id - d.idempotent) == n);

    const auto iso = splitting_iso(x, d);
    const auto& s = iso.splitting;
    REQUIRE(iso.alpha.rows() == r);
    REQUIRE(iso.alpha * iso.alpha_inverse == M::identity(r, field));
    REQUIRE(iso.alpha_inverse * iso.alpha == M::identity(r, field));
    REQUIRE(iso.alpha * s.retraction == s.retraction * x);
    REQUIRE(x * s.section == s.section * iso.alpha);
    REQUIRE(s.section * s.retraction * x.pow(d.index) == x.pow(d.index));

    const auto cn = core_nilpotent(x, d);
    REQUIRE(check_core_nilpotent(x, cn.core, cn.nilpotent_part).passed);
    REQUIRE(cn.nilpotent_part.pow(cn.nilpotent_index).is_zero());
    // Uniqueness: shifting mass between core and nilpotent part breaks CND.
    const TestType one = TestType::one(field);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        M delta = M::zero(n, n, field);
        delta(i, j) = one;
        REQUIRE_FALSE(check_core_nilpotent(x, cn.core + delta, cn.nilpotent_part - delta).passed);
      }

    REQUIRE(complement_formula_check(x, d));
    REQUIRE(munn_power_iso_check(x, d));

    const auto fit = fitting_decomposition(x, d);
    REQUIRE(fit.invertible_block.rows() == r);
    REQUIRE(fit.nilpotent_block.rows() == n - r);
    REQUIRE(fit.change_of_basis * fit.inverse_change_of_basis == id);
    REQUIRE(fit.change_of_basis * M::direct_sum(fit.invertible_block, fit.nilpotent_block) *
                fit.inverse_change_of_basis ==
            x);
    REQUIRE(try_invert(fit.invertible_block).has_value());
    REQUIRE(fit.nilpotent_block.pow(n).is_zero());
    const M rebuilt = fit.change_of_basis *
                      M::direct_sum(invert_matrix(fit.invertible_block), M::zero(n - r, n - r, field)) *
                      fit.inverse_change_of_basis;
    REQUIRE(rebuilt == d.inverse);

    const auto fam = eventuating_family(x, d);
    REQUIRE(fam.window == d.index + 2);
    REQUIRE(check_eventuating(x, fam).passed);

    const std::size_t rk = rank(x.pow(d.index));
    for (std::size_t m = 0; m <= 3; ++m) REQUIRE(rank(x.pow(d.index + m)) == rk);
  }
}
