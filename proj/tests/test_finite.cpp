#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "drazin/axioms.hpp"
#include "drazin/drazin.hpp"
#include "drazin/errors.hpp"
#include "drazin/finite.hpp"
#include "drazin/monoid.hpp"
#include "drazin/oracle.hpp"
#include "support.hpp"

using namespace drazin;
using namespace testing;

namespace {

EndoFun fn(std::vector<std::size_t> t) { return EndoFun(std::move(t)); }

std::uint64_t modular_oracle(std::uint64_t modulus, std::uint64_t x) {
  const ModularMultiplicativeMonoid m(modulus);
  std::vector<std::uint64_t> all(modulus);
  for (std::uint64_t i = 0; i < modulus; ++i) all[i] = i;
  auto found = brute_force_drazin(m, x, std::span<const std::uint64_t>(all), 64);
  REQUIRE(found.has_value());
  return *found;
}

}  // namespace

TEST_CASE("EndoFun basics", "[finite]") {
  const auto f = fn({1, 2, 1});
  const auto g = fn({0, 0, 2});
  CHECK(f.after(g).table() == std::vector<std::size_t>{1, 1, 1});
  CHECK(g.after(f).table() == std::vector<std::size_t>{0, 2, 0});
  CHECK(TransformationMonoid(3).multiply(f, g) == f.after(g));
  CHECK(TransformationMonoid(3).order() == 27);
  CHECK(TransformationMonoid(0).order() == 1);
  try {
    (void)fn({0, 3, 1});
    FAIL("expected ShapeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::shape_mismatch);
  }
}

TEST_CASE("eventual_image examples", "[finite]") {
  auto bij = eventual_image(fn({1, 2, 0}));
  CHECK(bij.index == 0);
  CHECK(bij.stable_set == std::vector<std::size_t>{0, 1, 2});

  auto cst = eventual_image(fn({0, 0, 0}));
  CHECK(cst.index == 1);
  CHECK(cst.stable_set == std::vector<std::size_t>{0});

  // 2 -> 1 -> 0 -> 0: images {0,1,2}, {0,1}, {0}.
  auto chain = eventual_image(fn({0, 0, 1}));
  CHECK(chain.index == 2);
  CHECK(chain.stable_set == std::vector<std::size_t>{0});

  auto fold = eventual_image(fn({1, 2, 1}));
  CHECK(fold.index == 1);
  CHECK(fold.stable_set == std::vector<std::size_t>{1, 2});

  CHECK(eventual_image(EndoFun(std::vector<std::size_t>{})).index == 0);
}

TEST_CASE("endo_drazin examples", "[finite]") {
  const TransformationMonoid t3(3);
  const auto all = all_endofunctions(3);
  REQUIRE(all.size() == 27);

  auto bij = endo_drazin(fn({1, 2, 0}));
  CHECK(bij.inverse == fn({2, 0, 1}));
  CHECK(bij.index == 0);

  auto cst = endo_drazin(fn({0, 0, 0}));
  CHECK(cst.inverse == fn({0, 0, 0}));
  CHECK(cst.index == 1);

  auto chain = endo_drazin(fn({0, 0, 1}));
  CHECK(chain.inverse == fn({0, 0, 0}));
  CHECK(chain.index == 2);

  // f swaps 1 and 2 on its eventual image; the swap is its own inverse.
  const auto fold = fn({1, 2, 1});
  auto d = endo_drazin(fold);
  CHECK(d.inverse == fn({1, 2, 1}));
  CHECK(d.index == 1);
  auto oracle = brute_force_drazin(t3, fold, std::span<const EndoFun>(all), 3);
  REQUIRE(oracle.has_value());
  CHECK(*oracle == fn({1, 2, 1}));
  // Applying the restricted inverse only once gives [2,1,2], which is not
  // a Drazin inverse.
  auto once = check_drazin_in(t3, fold, fn({2, 1, 2}), 3);
  CHECK_FALSE(once.passed);
  CHECK(std::find(once.failed_axioms.begin(), once.failed_axioms.end(), "D.2") != once.failed_axioms.end());
}

TEST_CASE("monoid_drazin on Z/n", "[finite]") {
  const ModularMultiplicativeMonoid z12(12);
  auto a = monoid_drazin(z12, z12.element(2), 64);
  CHECK(a.inverse == 8);
  CHECK(a.tail == 2);
  CHECK(a.period == 2);
  CHECK(minimal_drazin_index(z12, 2, a.inverse, a.index_bound) == 2);
  CHECK(modular_oracle(12, 2) == 8);

  const ModularMultiplicativeMonoid z8(8);
  auto b = monoid_drazin(z8, z8.element(2), 64);
  CHECK(b.inverse == 0);
  CHECK(minimal_drazin_index(z8, 2, b.inverse, b.index_bound) == 3);
  CHECK(modular_oracle(8, 2) == 0);

  const ModularMultiplicativeMonoid z10(10);
  CHECK(monoid_drazin(z10, 4, 64).inverse == 4);
  CHECK(modular_oracle(10, 4) == 4);

  const ModularMultiplicativeMonoid z7(7);
  CHECK(monoid_drazin(z7, 3, 64).inverse == 5);
  CHECK(monoid_drazin(z7, z7.identity(), 64).inverse == 1);

  for (std::uint64_t mod : {2u, 6u, 8u, 9u, 12u, 18u, 30u, 36u}) {
    const ModularMultiplicativeMonoid z(mod);
    for (std::uint64_t x = 0; x < mod; ++x) {
      auto r = monoid_drazin(z, x, 4 * mod);
      REQUIRE(r.inverse == modular_oracle(mod, x));
      REQUIRE(check_drazin_in(z, x, r.inverse, 64).passed);
    }
  }

  try {
    (void)monoid_drazin(z8, 2, 2);
    FAIL("expected CycleNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::cycle_not_found);
  }
}

TEST_CASE("power cycle structure", "[finite]") {
  const ModularMultiplicativeMonoid z12(12);
  auto c = find_power_cycle(z12, 2, 64);
  CHECK(c.powers == std::vector<std::uint64_t>{1, 2, 4, 8});
  CHECK(c.power(10) == c.power(10 + c.period));
  for (std::uint64_t e = c.tail; e < 20; ++e) REQUIRE(c.power(e) == power(z12, std::uint64_t{2}, e));
}

TEST_CASE("transformation monoid agrees with endo_drazin", "[finite]") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const TransformationMonoid t(n);
    for (const auto& f : all_endofunctions(n)) {
      const auto direct = endo_drazin(f);
      const auto cyc = monoid_drazin(t, f, default_max_steps(t));
      REQUIRE(direct.inverse == cyc.inverse);
      REQUIRE(minimal_drazin_index(t, f, cyc.inverse, cyc.index_bound) == direct.index);
    }
  }
}

TEST_CASE("route C matches route A over F_p", "[finite]") {
  std::mt19937_64 rng(8);
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto field = fp(p);
    for (int trial = 0; trial < 60; ++trial) {
      std::uniform_int_distribution<std::size_t> dim(1, 3);
      const std::size_t n = dim(rng);
      const auto x = random_matrix<Residue>(rng, n, n, field);
      const auto a = drazin_inverse(x);
      const auto c = monoid_cycle_drazin(x);
      REQUIRE(c.route == Route::monoid_cycle);
      REQUIRE(c.inverse == a.inverse);
      REQUIRE(c.index == a.index);
      REQUIRE(c.idempotent == a.idempotent);
    }
  }
  const auto id = PMat::identity(3, fp(5));
  CHECK(monoid_cycle_drazin(id).inverse == id);
  CHECK(monoid_cycle_drazin(id).index == 0);
}
