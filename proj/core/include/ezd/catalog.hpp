#pragma once

#include <cstdint>
#include <vector>

#include "ezd/algebra.hpp"
#include "ezd/criterion.hpp"

namespace ezd {

// Parameters of a compressed level algebra: embedding dimension c, socle
// degree e, Cohen-Macaulay type r.
struct CompressedParams {
  long c = 0;
  long e = 0;
  long r = 0;
};

// The compressed level Hilbert function
//   HF(i) = min(dim [P]_i, r * dim [P]_{e-i}),  0 <= i <= e,
// in c variables.
HilbertData compressed_hf(const CompressedParams& p);

struct CompressedScreenReport {
  CompressedParams params;
  HilbertData hf;
  // Least degree in which the defining ideal has a generator; a product of
  // an exact pair is a minimal generator, so its degree sum is at least this.
  int first_gen_degree = 0;
  std::vector<int> candidates;  // first_gen_degree .. e + 1
  ScreeningReport screening;
};

// Run the residue-sum screen over every degree sum a pair could have in a
// compressed level algebra with these parameters.
CompressedScreenReport compressed_screen(const CompressedParams& p);

// Hilbert function of the Artinian reduction of the ring of r x c generic
// matrices modulo 2 x 2 minors: HF(i) = binom(r-1, i) binom(c-1, i) for
// 0 <= i <= r - 1.  Requires 2 <= r <= c.
HilbertData determinantal_hs(long r, long c);

// sum_{i=0}^{a} (-1)^i binom(a, i) binom(b, i), the value at t = -1 of the
// determinantal Hilbert series with a = r - 1, b = c - 1.
long long alternating_binomial_sum(long a, long b);

// Absolute value of the alternating sum above, cross-checked against the
// closed forms available for b - a <= 3 (InternalError on disagreement).
// Requires 0 <= a <= b.
long long n_ab(long a, long b);

// Coefficients of the Eulerian polynomial A_s(t) by power of t (index k
// holds the number of permutations of s letters with k descents counted
// the classical way, so A_1 = t and sum of coefficients = s!).  Computed by
// the descent recurrence A(s, k) = k A(s-1, k) + (s - k + 1) A(s-1, k-1).
std::vector<long long> eulerian_polynomial(long s);

// The same coefficients from the generating function: the series expansion
// of (1 - t)^{s+1} * sum_{i >= 0} i^s t^i through degree `truncation`, which
// reproduces A_s and then vanishes.  Independent of the recurrence route.
std::vector<long long> eulerian_from_series(long s, long truncation);

// Zigzag numbers E_0 .. E_up_to from E_0 = E_1 = 1 and
// 2 E_{s+1} = sum_k binom(s, k) E_k E_{s-k}.
std::vector<long long> euler_numbers(long up_to);

// Hilbert data of the Artinian reduction of the s-fold Segre product of
// polynomial rings in two variables: the Hilbert series is A_s(t) / t, so
// HF(i) = A(s, i + 1) and the value at t = -1 is -A_s(-1).
struct SegreSeries {
  long s = 0;
  HilbertData hf;
  long long value_at_minus_one = 0;
};
SegreSeries segre_hs(long s);

// First-principles verification of the threefold case: the nine flattening
// minors are independent, the coordinate ring has dimension (d + 1)^3 in
// low degrees, a random linear reduction reaches the series above, the
// socle is one-dimensional, and the residue-sum screen rules out the one
// possible degree sum.
struct SegreCheckReport {
  std::uint64_t seed = 0;
  long quadric_count = 0;
  bool quadrics_independent = false;
  std::vector<long> ambient_dims;  // degrees 0 .. 3
  HilbertData reduced_hf;
  bool matches_series = false;
  SocleReport socle;
  ScreeningReport screening;
  bool pass = false;
};
SegreCheckReport segre_direct_check(std::uint64_t seed);

}  // namespace ezd
