#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>

#include "ezd/algebra.hpp"
#include "ezd/criterion.hpp"
#include "ezd/factorization.hpp"
#include "ezd/fixtures.hpp"
#include "ezd/matrix.hpp"
#include "ezd/pairs.hpp"
#include "ezd/parse.hpp"

using namespace ezd;

namespace {

Mat random_square(std::size_t n, const FieldSpec& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-9, 9);
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = Scalar::from_long(d(rng), f);
  return m;
}

void BM_rref_prime(benchmark::State& state) {
  Mat m = random_square(static_cast<std::size_t>(state.range(0)),
                        FieldSpec::prime(32003), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_prime)->Arg(32)->Arg(64)->Arg(128);

void BM_rref_rational(benchmark::State& state) {
  Mat m = random_square(static_cast<std::size_t>(state.range(0)),
                        FieldSpec::rationals(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_rref_rational)->Arg(16)->Arg(32)->Arg(64);

void BM_build_five_variable_example(benchmark::State& state) {
  AlgebraSpec spec = example_may4(FieldSpec::rationals());
  for (auto _ : state)
    benchmark::DoNotOptimize(build_algebra(spec).top_degree());
}
BENCHMARK(BM_build_five_variable_example);

void BM_multiplication_map(benchmark::State& state) {
  GradedAlgebra a = build_algebra(example_may4(FieldSpec::rationals()));
  Poly theta = parse_polynomial("x^2+y^2-z^2-w^2", a.vars(),
                                FieldSpec::rationals());
  for (auto _ : state)
    benchmark::DoNotOptimize(multiplication_map(a, theta).mats.size());
}
BENCHMARK(BM_multiplication_map);

void BM_pair_verification(benchmark::State& state) {
  GradedAlgebra a = build_algebra(example_may4(FieldSpec::rationals()));
  Poly t1 = parse_polynomial("x^2+y^2-z^2-w^2", a.vars(),
                             FieldSpec::rationals());
  Poly t2 = parse_polynomial("x^2+y^2+z^2+w^2", a.vars(),
                             FieldSpec::rationals());
  for (auto _ : state) benchmark::DoNotOptimize(verify_pair(a, t1, t2).exact);
}
BENCHMARK(BM_pair_verification);

void BM_factorization(benchmark::State& state) {
  GradedAlgebra a = build_algebra(example_may4(FieldSpec::rationals()));
  Poly t1 = parse_polynomial("x^2+y^2-z^2-w^2", a.vars(),
                             FieldSpec::rationals());
  for (auto _ : state)
    benchmark::DoNotOptimize(build_factorization(a, t1).size());
}
BENCHMARK(BM_factorization);

void BM_strand_check(benchmark::State& state) {
  GradedAlgebra a = build_algebra(example_x4(FieldSpec::rationals()));
  Poly x2 = parse_polynomial("x^2", a.vars(), FieldSpec::rationals());
  PeriodicComplex pc = build_periodic_complex(a, x2, x2);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_strand_exactness(a, pc, -7, 7).all_exact);
}
BENCHMARK(BM_strand_check);

void BM_screen(benchmark::State& state) {
  GradedAlgebra a = build_algebra(example_may4(FieldSpec::rationals()));
  std::vector<int> cands = default_candidates(a.hilbert());
  for (auto _ : state)
    benchmark::DoNotOptimize(screen_periods(a.hilbert(), cands).remaining);
}
BENCHMARK(BM_screen);

}  // namespace

BENCHMARK_MAIN();
