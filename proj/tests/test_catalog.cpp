#include <doctest.h>

#include <cstddef>
#include <cstdlib>
#include <vector>

#include "ezd/binomial.hpp"
#include "ezd/catalog.hpp"
#include "ezd/error.hpp"

using namespace ezd;

TEST_SUITE_BEGIN("catalog");

TEST_CASE("compressed level hilbert functions") {
  CHECK(compressed_hf({3, 5, 1}).values ==
        std::vector<long>{1, 3, 6, 6, 3, 1});
  CHECK(compressed_hf({4, 4, 1}).values == std::vector<long>{1, 4, 10, 4, 1});
  CHECK(compressed_hf({4, 6, 1}).values ==
        std::vector<long>{1, 4, 10, 20, 10, 4, 1});
  CHECK(compressed_hf({2, 3, 2}).values == std::vector<long>{1, 2, 3, 2});
  CHECK(compressed_hf({3, 3, 1}).values == std::vector<long>{1, 3, 3, 1});

  // type one means a symmetric function
  for (long c = 2; c <= 5; ++c)
    for (long e = 2; e <= 7; ++e) {
      HilbertData h = compressed_hf({c, e, 1});
      CHECK(h.top_degree() == e);
      for (int i = 0; i <= e; ++i)
        CHECK(h.at(i) == h.at(static_cast<int>(e) - i));
    }
}

TEST_CASE("compressed screening pins the candidate window") {
  CompressedScreenReport r = compressed_screen({4, 4, 1});
  CHECK(r.hf.values == std::vector<long>{1, 4, 10, 4, 1});
  CHECK(r.first_gen_degree == 3);
  CHECK(r.candidates == std::vector<int>{3, 4, 5});
  CHECK(r.screening.no_pair_possible());

  CompressedScreenReport e3 = compressed_screen({3, 3, 1});
  CHECK(e3.first_gen_degree == 2);
  CHECK(e3.screening.remaining == std::vector<int>{2});
}

TEST_CASE("determinantal series values") {
  CHECK(determinantal_hs(2, 3).values == std::vector<long>{1, 2});
  CHECK(determinantal_hs(4, 5).values == std::vector<long>{1, 12, 18, 4});
  for (long r = 2; r <= 6; ++r)
    for (long c = r; c <= 7; ++c) {
      HilbertData h = determinantal_hs(r, c);
      CHECK(h.top_degree() == r - 1);
      for (int i = 0; i < static_cast<int>(r); ++i)
        CHECK(h.at(i) == binom_ll(r - 1, i) * binom_ll(c - 1, i));
      CHECK(h.total() == binom_ll(r + c - 2, r - 1));
    }
}

TEST_CASE("alternating binomial sums against their closed forms") {
  CHECK(alternating_binomial_sum(1, 3) == -2);
  CHECK(alternating_binomial_sum(1, 4) == -3);
  CHECK(alternating_binomial_sum(2, 4) == -1);
  CHECK(alternating_binomial_sum(2, 5) == 1);
  CHECK(alternating_binomial_sum(2, 2) == -2);
  CHECK(alternating_binomial_sum(3, 3) == 0);

  CHECK(n_ab(1, 3) == 2);
  CHECK(n_ab(1, 4) == 3);
  CHECK(n_ab(2, 4) == 1);
  CHECK(n_ab(2, 5) == 1);
  CHECK(n_ab(2, 2) == 2);
  CHECK(n_ab(3, 3) == 0);
  CHECK(n_ab(4, 4) == 6);

  // the closed-form cross-check runs inside n_ab; sweep the covered band
  for (long a = 0; a <= 12; ++a)
    for (long b = a; b <= a + 3; ++b)
      CHECK(n_ab(a, b) == std::llabs(alternating_binomial_sum(a, b)));
}

TEST_CASE("descent polynomial table and its identities") {
  CHECK(eulerian_polynomial(0) == std::vector<long long>{1});
  CHECK(eulerian_polynomial(1) == std::vector<long long>{0, 1});
  CHECK(eulerian_polynomial(2) == std::vector<long long>{0, 1, 1});
  CHECK(eulerian_polynomial(3) == std::vector<long long>{0, 1, 4, 1});
  CHECK(eulerian_polynomial(4) == std::vector<long long>{0, 1, 11, 11, 1});
  CHECK(eulerian_polynomial(5) == std::vector<long long>{0, 1, 26, 66, 26, 1});

  for (long s = 1; s <= 10; ++s) {
    std::vector<long long> a = eulerian_polynomial(s);
    long long sum = 0;
    for (long long c : a) sum += c;
    CHECK(sum == factorial_ll(static_cast<int>(s)));
    // palindromic coefficient row
    for (std::size_t i = 1; i < a.size(); ++i)
      CHECK(a[i] == a[a.size() - i]);
  }
}

TEST_CASE("the generating-series route reproduces the recurrence") {
  for (long s = 0; s <= 8; ++s) {
    std::vector<long long> rec = eulerian_polynomial(s);
    std::vector<long long> ser = eulerian_from_series(s, 12);
    REQUIRE(ser.size() == 13);
    for (std::size_t i = 0; i < ser.size(); ++i) {
      long long want = (i < rec.size()) ? rec[i] : 0;
      CHECK(ser[i] == want);
    }
  }
}

TEST_CASE("zigzag numbers from the convolution recurrence") {
  std::vector<long long> e = euler_numbers(10);
  CHECK(e == std::vector<long long>{1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936,
                                    50521});

  // values of the descent polynomial at -1 alternate between them and zero
  for (long s = 2; s <= 10; s += 2) {
    std::vector<long long> a = eulerian_polynomial(s);
    long long at = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      at += (i % 2 == 0 ? a[i] : -a[i]);
    CHECK(at == 0);
  }
  for (long s = 1; s <= 9; s += 2) {
    std::vector<long long> a = eulerian_polynomial(s);
    long long at = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      at += (i % 2 == 0 ? a[i] : -a[i]);
    CHECK(std::llabs(at) == e[static_cast<std::size_t>(s)]);
  }
}

TEST_CASE("threefold product series") {
  SegreSeries s3 = segre_hs(3);
  CHECK(s3.hf.values == std::vector<long>{1, 4, 1});
  CHECK(s3.value_at_minus_one == -2);

  SegreSeries s5 = segre_hs(5);
  CHECK(s5.hf.values == std::vector<long>{1, 26, 66, 26, 1});
  CHECK(s5.value_at_minus_one == 16);

  SegreSeries s2 = segre_hs(2);
  CHECK(s2.hf.values == std::vector<long>{1, 1});
  CHECK(s2.value_at_minus_one == 0);
}

TEST_CASE("threefold product checked from first principles") {
  SegreCheckReport r = segre_direct_check(7);
  CHECK(r.pass);
  CHECK(r.quadric_count == 9);
  CHECK(r.quadrics_independent);
  CHECK(r.ambient_dims == std::vector<long>{1, 8, 27, 64});
  CHECK(r.reduced_hf.values == std::vector<long>{1, 4, 1});
  CHECK(r.matches_series);
  CHECK(r.socle.gorenstein);
  CHECK(r.screening.no_pair_possible());

  SegreCheckReport r2 = segre_direct_check(1301);
  CHECK(r2.pass);
}

TEST_SUITE_END();
