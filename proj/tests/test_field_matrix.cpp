#include <doctest.h>

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "ezd/error.hpp"
#include "ezd/field.hpp"
#include "ezd/matrix.hpp"
#include "helpers.hpp"

using namespace ezd;

TEST_SUITE_BEGIN("field_matrix");

TEST_CASE("rational scalars reduce to canonical form") {
  Scalar half = Scalar::rational(2, 4);
  CHECK(half == Scalar::rational(1, 2));
  CHECK(half.str() == "1/2");
  CHECK((-half).str() == "-1/2");
  CHECK(Scalar::rational(-3, -6) == half);
  CHECK(Scalar::rational(3, -6).str() == "-1/2");

  Scalar third = Scalar::rational(1, 3);
  Scalar sixth = Scalar::rational(1, 6);
  CHECK(third + sixth == half);
  CHECK(half * Scalar::from_long(2, FieldSpec::rationals()) ==
        Scalar::one(FieldSpec::rationals()));
  CHECK(half - half == Scalar::zero(FieldSpec::rationals()));
  CHECK(half.inv() == Scalar::from_long(2, FieldSpec::rationals()));
}

TEST_CASE("prime field scalars live in canonical residues") {
  FieldSpec f5 = FieldSpec::prime(5);
  CHECK(Scalar::from_long(-1, f5).residue() == 4);
  CHECK(Scalar::from_long(7, f5).residue() == 2);
  CHECK(Scalar::from_long(2, f5).inv().residue() == 3);
  CHECK(Scalar::from_long(10, f5).is_zero());
  CHECK(Scalar::from_long(6, f5).is_one());
  CHECK(Scalar::from_mpz(mpz_class("100000000000000000003"), f5).residue() ==
        mpz_class("100000000000000000003") % 5);

  FieldSpec f7 = FieldSpec::prime(7);
  for (long a = 1; a < 7; ++a) {
    Scalar s = Scalar::from_long(a, f7);
    CHECK((s * s.inv()).is_one());
  }
}

TEST_CASE("field descriptors validate their modulus") {
  CHECK(is_prime(2));
  CHECK(is_prime(32003));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(32001));
  CHECK(FieldSpec::prime(32003).str() == "F_32003");
  CHECK(FieldSpec::rationals().str() == "Q");
  CHECK_THROWS_AS(FieldSpec::prime(4), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
  CHECK_THROWS_AS(FieldSpec::prime(1L << 31), InputError);
}

TEST_CASE("mixed-field arithmetic is rejected") {
  Scalar q = Scalar::one(FieldSpec::rationals());
  Scalar p = Scalar::one(FieldSpec::prime(5));
  CHECK_THROWS(q + p);
  CHECK_THROWS(q * p);
}

TEST_CASE("matrix product against a worked example") {
  FieldSpec q = FieldSpec::rationals();
  Mat a(q, 2, 3);
  Mat b(q, 3, 2);
  long av[2][3] = {{1, 2, 3}, {4, 5, 6}};
  long bv[3][2] = {{7, 8}, {9, 10}, {11, 12}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) a.at(i, j) = Scalar::from_long(av[i][j], q);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 2; ++j) b.at(i, j) = Scalar::from_long(bv[i][j], q);
  Mat c = a * b;
  long cv[2][2] = {{58, 64}, {139, 154}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      CHECK(c.at(i, j) == Scalar::from_long(cv[i][j], q));
  CHECK(c.transpose() == b.transpose() * a.transpose());
}

TEST_CASE("reduced echelon form of a rank-one matrix") {
  FieldSpec q = FieldSpec::rationals();
  Mat m(q, 2, 3);
  long v[2][3] = {{1, 2, 3}, {2, 4, 6}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = Scalar::from_long(v[i][j], q);
  RrefResult r = rref(m);
  CHECK(r.rank == 1);
  REQUIRE(r.pivot_cols == std::vector<std::size_t>{0});
  CHECK(r.reduced.at(0, 1) == Scalar::from_long(2, q));
  CHECK(r.reduced.at(0, 2) == Scalar::from_long(3, q));
  CHECK(r.reduced.at(1, 0).is_zero());
  CHECK(r.reduced.at(1, 2).is_zero());

  Mat k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());
}

TEST_CASE("echelon reduction properties on random matrices") {
  std::mt19937_64 rng(20260814);
  for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(32003),
                      FieldSpec::prime(2)}) {
    for (int trial = 0; trial < 12; ++trial) {
      std::size_t rows = 1 + static_cast<std::size_t>(rng() % 6);
      std::size_t cols = 1 + static_cast<std::size_t>(rng() % 8);
      Mat m = tst::random_mat(rng, f, rows, cols);
      RrefResult r = rref(m);

      CHECK(r.rank == r.pivot_cols.size());
      CHECK(r.rank <= std::min(rows, cols));
      CHECK(rank_of(m) == r.rank);
      CHECK(rank_of(m.transpose()) == r.rank);

      // pivot columns of the reduced form are unit vectors
      for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi) {
        for (std::size_t i = 0; i < rows; ++i) {
          if (i == pi)
            CHECK(r.reduced.at(i, r.pivot_cols[pi]).is_one());
          else
            CHECK(r.reduced.at(i, r.pivot_cols[pi]).is_zero());
        }
      }

      // reducing the reduced form changes nothing
      CHECK(rref(r.reduced).reduced == r.reduced);

      // kernel: right dimension, killed by m, independent columns
      Mat k = kernel_basis(m);
      CHECK(k.cols() == cols - r.rank);
      if (k.cols() > 0) {
        CHECK((m * k).is_zero());
        CHECK(rank_of(k) == k.cols());
      }

      // streaming eliminator agrees with the dense rank
      Eliminator el(f, cols);
      std::size_t absorbed = 0;
      for (std::size_t i = 0; i < rows; ++i)
        if (el.absorb(m.row(i))) ++absorbed;
      CHECK(el.rank() == r.rank);
      CHECK(absorbed == r.rank);

      // incremental reduced echelon reproduces the canonical rows
      ReducedEchelon re(f, cols);
      for (std::size_t i = 0; i < rows; ++i) re.absorb(m.row(i));
      CHECK(re.rank() == r.rank);
      CHECK(re.pivot_cols() == r.pivot_cols);
      for (std::size_t pi = 0; pi < r.pivot_cols.size(); ++pi) {
        const std::vector<Scalar>& row = re.row_for_pivot(r.pivot_cols[pi]);
        for (std::size_t j = 0; j < cols; ++j) CHECK(row[j] == r.reduced.at(pi, j));
      }
    }
  }
}

TEST_CASE("rank is invariant under row scaling and swaps") {
  std::mt19937_64 rng(7);
  FieldSpec f = FieldSpec::prime(32003);
  Mat m = tst::random_mat(rng, f, 4, 5);
  std::size_t base = rank_of(m);
  Mat scaled = m;
  for (std::size_t j = 0; j < 5; ++j)
    scaled.at(2, j) = scaled.at(2, j) * Scalar::from_long(17, f);
  CHECK(rank_of(scaled) == base);
  Mat swapped = m;
  for (std::size_t j = 0; j < 5; ++j) std::swap(swapped.at(0, j), swapped.at(3, j));
  CHECK(rank_of(swapped) == base);
}

TEST_SUITE_END();
