#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "drazin/axioms.hpp"
#include "drazin/decomp.hpp"
#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/linalg.hpp"
#include "support.hpp"

using namespace drazin;
using namespace testing;

namespace {

QMat half_diag() {
  QMat m(2, 2, kQ);
  m(0, 0) = rat(1, 2);
  return m;
}

}  // namespace

TEST_CASE("drazin_index examples", "[drazin]") {
  CHECK(drazin_index(q({{1, 2}, {3, 4}})) == 0);
  CHECK(drazin_index(q({{0, 1}, {0, 0}})) == 2);
  CHECK(drazin_index(q({{2, 0}, {0, 0}})) == 1);
  CHECK(drazin_index(QMat(0, 0, kQ)) == 0);
  try {
    (void)drazin_index(q({{1, 2}}));
    FAIL("expected NotSquare");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_square);
  }
}

TEST_CASE("drazin_inverse examples", "[drazin]") {
  const auto e = q({{1, 1}, {0, 0}});
  auto de = drazin_inverse(e);
  CHECK(de.inverse == e);
  CHECK(de.index == 1);

  auto dn = drazin_inverse(q({{0, 1}, {0, 0}}));
  CHECK(dn.inverse.is_zero());
  CHECK(dn.index == 2);

  const auto x = q({{2, 0}, {0, 0}});
  auto dx = drazin_inverse(x);
  CHECK(dx.inverse == half_diag());
  CHECK(dx.index == 1);
  // Axioms evaluated by hand.
  CHECK(x.pow(2) * dx.inverse == x);
  CHECK(dx.inverse * x * dx.inverse == dx.inverse);
  CHECK(x * dx.inverse == dx.inverse * x);
  CHECK(image_kernel_drazin(x).inverse == dx.inverse);

  auto d0 = drazin_inverse(QMat(0, 0, kQ));
  CHECK(d0.index == 0);
  CHECK(d0.inverse.rows() == 0);

  const auto inv = q({{2, 1}, {1, 1}});
  auto di = drazin_inverse(inv);
  CHECK(di.index == 0);
  CHECK(di.inverse == invert_matrix(inv));
  CHECK(di.idempotent == QMat::identity(2, kQ));
}

TEST_CASE("group_inverse examples", "[drazin]") {
  const auto x = q({{2, 1}, {1, 1}});
  CHECK(*group_inverse(x) == invert_matrix(x));
  const auto e = q({{1, 1}, {0, 0}});
  CHECK(*group_inverse(e) == e);
  CHECK_FALSE(group_inverse(q({{0, 1}, {0, 0}})).has_value());
  const auto g = *group_inverse(q({{2, 0}, {0, 0}}));
  CHECK(check_group(q({{2, 0}, {0, 0}}), g).passed);
}

TEST_CASE("drazin_from_pi_witnesses examples", "[drazin]") {
  const auto x = q({{2, 1}, {1, 1}});
  const auto xi = invert_matrix(x);
  CHECK(drazin_from_pi_witnesses(x, xi, 0, xi, 0) == xi);

  const auto e = q({{1, 1}, {0, 0}});
  CHECK(drazin_from_pi_witnesses(e, e, 1, e, 1) == e);

  const auto d = q({{2, 0}, {0, 0}});
  CHECK(drazin_from_pi_witnesses(d, half_diag(), 1, half_diag(), 1) == half_diag());
  CHECK(drazin_from_pi_witnesses(d, half_diag(), 1, half_diag(), 1) == drazin_inverse(d).inverse);

  try {
    (void)drazin_from_pi_witnesses(d, d, 1, half_diag(), 1);
    FAIL("expected WitnessInvalid");
  } catch (const Error& e2) {
    CHECK(e2.code() == Errc::witness_invalid);
  }
}

TEMPLATE_TEST_CASE("drazin_core invariants", "[drazin][property]", Rational, Residue) {
  std::mt19937_64 rng(2024);
  const auto field = std::is_same_v<TestType, Rational> ? kQ : fp(5);
  using M = Matrix<TestType>;
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    const std::size_t n = dim(rng);
    const M x = random_matrix<TestType>(rng, n, n, field);
    const auto d = drazin_inverse(x);
    const M& xd = d.inverse;
    const std::size_t k = d.index;

    REQUIRE(check_drazin(x, xd).passed);
    REQUIRE(check_drazin(x, xd).witnessed_index == k);
    REQUIRE(k <= n);
    REQUIRE(d.idempotent * d.idempotent == d.idempotent);
    REQUIRE(image_kernel_drazin(x).inverse == xd);

    // Power identities.
    for (std::size_t m = k; m <= k + 3; ++m) REQUIRE(x.pow(m + 1) * xd == x.pow(m));
    for (std::size_t m = 0; m <= 4; ++m) REQUIRE(x.pow(m) * xd.pow(m + 1) == xd);

    // Iteration.
    for (std::size_t m = 0; m <= 4; ++m) REQUIRE(drazin_inverse(x.pow(m)).inverse == xd.pow(m));

    // Transpose.
    REQUIRE(drazin_inverse(x.transpose()).inverse == xd.transpose());

    // Conjugation: (P x P^-1)^D = P x^D P^-1.
    const M p = random_invertible<TestType>(rng, n, field);
    const M pi = invert_matrix(p);
    REQUIRE(drazin_inverse(p * x * pi).inverse == p * xd * pi);

    // Commuting squares: a x = y a implies a x^D = y^D a. Take y = P x P^-1
    // with a = P, and also a = x^j (commuting with x itself).
    const M y = p * x * pi;
    REQUIRE(p * x == y * p);
    REQUIRE(p * xd == drazin_inverse(y).inverse * p);
    const M a = x.pow(2) + x;
    REQUIRE(a * x == x * a);
    REQUIRE(a * xd == xd * a);
    // Rectangular intertwiner: the inclusion of A into A (+) B.
    const M w = random_matrix<TestType>(rng, 2, 2, field);
    const M big = M::direct_sum(x, w);
    const M incl = M::vstack(M::identity(n, field), M::zero(2, n, field));
    REQUIRE(incl * x == big * incl);
    REQUIRE(incl * xd == drazin_inverse(big).inverse * incl);

    // Double and triple Drazin.
    const auto dd = drazin_inverse(xd);
    REQUIRE(dd.inverse == x * xd * x);
    REQUIRE(dd.index <= 1);
    REQUIRE(drazin_inverse(dd.inverse).inverse == xd);

    // Strong pi-regularity round trip with y = z = x^D, p = q = k.
    REQUIRE(drazin_from_pi_witnesses(x, xd, k, xd, k) == xd);
  }
}
