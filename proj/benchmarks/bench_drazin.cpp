#include <benchmark/benchmark.h>

#include <random>

#include "drazin/decomp.hpp"
#include "drazin/drazin.hpp"
#include "drazin/finite.hpp"
#include "drazin/pairs.hpp"

using namespace drazin;

namespace {

template <class S>
Matrix<S> sample(std::size_t rows, std::size_t cols, const FieldDescriptor& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> entry(field.is_rational() ? -5 : 0,
                                                 field.is_rational() ? 5 : static_cast<long long>(field.modulus()) - 1);
  std::bernoulli_distribution zero(0.35);
  Matrix<S> m(rows, cols, field);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = S::from_integer(zero(rng) ? 0 : entry(rng), field);
  return m;
}

// Nilpotent Jordan block of size n/2 next to a random block, so that the
// index is nontrivial.
template <class S>
Matrix<S> mixed(std::size_t n, const FieldDescriptor& field) {
  const std::size_t h = n / 2;
  Matrix<S> nil(h, h, field);
  for (std::size_t i = 0; i + 1 < h; ++i) nil(i, i + 1) = S::one(field);
  return Matrix<S>::direct_sum(nil, sample<S>(n - h, n - h, field, n));
}

void BM_RouteA_Q(benchmark::State& state) {
  const auto x = mixed<Rational>(state.range(0), FieldDescriptor::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(drazin_inverse(x));
}
BENCHMARK(BM_RouteA_Q)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_RouteB_Q(benchmark::State& state) {
  const auto x = mixed<Rational>(state.range(0), FieldDescriptor::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(image_kernel_drazin(x));
}
BENCHMARK(BM_RouteB_Q)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

void BM_RouteA_F5(benchmark::State& state) {
  const auto x = mixed<Residue>(state.range(0), FieldDescriptor::prime_field(5));
  for (auto _ : state) benchmark::DoNotOptimize(drazin_inverse(x));
}
BENCHMARK(BM_RouteA_F5)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_RouteC_F5(benchmark::State& state) {
  const auto x = mixed<Residue>(state.range(0), FieldDescriptor::prime_field(5));
  for (auto _ : state) benchmark::DoNotOptimize(monoid_cycle_drazin(x));
}
BENCHMARK(BM_RouteC_F5)->Arg(2)->Arg(4)->Arg(6);

void BM_PairDrazin_Q(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto field = FieldDescriptor::rationals();
  const OpposingPair<Rational> pair(sample<Rational>(n, n + 1, field, 1), sample<Rational>(n + 1, n, field, 2));
  for (auto _ : state) benchmark::DoNotOptimize(pair_drazin(pair));
}
BENCHMARK(BM_PairDrazin_Q)->Arg(4)->Arg(8)->Arg(12);

void BM_MoorePenrose_Q(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const auto f = sample<Rational>(n, n + 2, FieldDescriptor::rationals(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(moore_penrose(f));
}
BENCHMARK(BM_MoorePenrose_Q)->Arg(4)->Arg(8)->Arg(12);

void BM_CoreNilpotent_Q(benchmark::State& state) {
  const auto x = mixed<Rational>(state.range(0), FieldDescriptor::rationals());
  const auto d = drazin_inverse(x);
  for (auto _ : state) benchmark::DoNotOptimize(core_nilpotent(x, d));
}
BENCHMARK(BM_CoreNilpotent_Q)->Arg(4)->Arg(8)->Arg(16);

void BM_EndoDrazin(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> table(n);
  for (auto& v : table) v = pick(rng);
  const EndoFun f(std::move(table));
  for (auto _ : state) benchmark::DoNotOptimize(endo_drazin(f));
}
BENCHMARK(BM_EndoDrazin)->Arg(16)->Arg(256)->Arg(4096);

}  // namespace
BENCHMARK_MAIN();
