#pragma once

#include <map>

#include "ezd/algebra.hpp"

namespace ezd {

struct SigmaProfile {
  int period = 0;
  std::vector<long> sums;  // sums[i] = sum of HF(j) over j = i mod period

  bool constant() const;
};

// Residue-class sums of the Hilbert function modulo the period.
SigmaProfile sigma_profile(const HilbertData& hf, int period);

struct DividesReport {
  int period = 0;
  SigmaProfile sigma;
  bool sigma_constant = false;
  bool division_exact = false;
  std::vector<long> quotient;  // Hilbert numerator over 1+t+...+t^{period-1}
  bool divides = false;
};

// Whether 1 + t + ... + t^{period-1} divides the Hilbert series.  Decided
// twice, by residue sums and by exact long division; the two routes are
// cross-checked and must agree.
DividesReport divides(const HilbertData& hf, int period);

struct ScreeningRow {
  int period = 0;
  std::vector<long> sums;
  bool pass = false;
};

struct ScreeningReport {
  std::vector<ScreeningRow> rows;
  std::vector<int> remaining;  // candidate periods that survived

  bool no_pair_possible() const { return remaining.empty(); }
};

// Runs the divisibility screen over each candidate total degree.  A period
// failing the screen cannot be d1 + d2 for any exact pair.
ScreeningReport screen_periods(const HilbertData& hf,
                               const std::vector<int>& candidates);

// Fallback candidate list when only the Hilbert function is known: every
// degree from the first one where the ideal is forced to be nonzero (the
// first d with HF(d) below the full polynomial dimension in hf(1) variables)
// up to top+1.
std::vector<int> default_candidates(const HilbertData& hf);

// Alternating binomial combination of the residue-class sums,
//
//   sum_{l=0}^{s1} (-1)^l binom(s1, l) sigma((n - l) mod period),
//
// which must vanish for every n whenever the algebra has an exact pair with
// degree sum `period` and s1 = HF(1).  Constant profiles give zero for any
// s1 >= 1; a nonzero value certifies that no such pair exists.
long long sigma_binomial_residual(const HilbertData& hf, int period, int s1,
                                  long n);

struct CirculantReport {
  int window = 0;  // b
  int size = 0;    // B
  std::vector<long long> first_row;
  long rank = 0;
  long kernel_dim = 0;
  bool ones_in_kernel = false;
};

// The B x B circulant whose first row holds the alternating binomial
// coefficients (-1)^i binom(b, i), padded with zeros, each row shifted one
// step right.  For 1 <= b < B the rank is B - 1 and the kernel is spanned by
// the all-ones vector.
CirculantReport circulant_kernel_check(int b, int size);

// Alternating sum over a twisted module layout: modules maps a homological
// index j to the twists of its free summands, each summand S(a) contributes
// (-1)^j HF(n + a).
long long strand_alternating_sum(
    const std::map<long, std::vector<long>>& modules, const HilbertData& hf,
    long n);

// Twist layout of the doubly infinite two-periodic complex of a pair with
// degrees (d1, d2): index 2p carries S(-pD) and index 2p-1 carries S(d1-pD)
// for every integer p, with D = d1 + d2.  Only summands whose strand meets
// [0, top] at degree n are emitted, which keeps the layout finite; the
// alternating sum over it is zero in every degree exactly because the full
// complex is exact.
std::map<long, std::vector<long>> pair_twist_modules(int d1, int d2,
                                                     const HilbertData& hf,
                                                     long n);

// Twist layout of the rank-2^{s1-1} two-periodic complex attached to a pair
// with degrees (d1, d2): index 2p carries S(i(d1-2) - pD) with multiplicity
// binom(s1, 2i) and index 2p-1 carries S(i(d1-2) + d1 - 1 - pD) with
// multiplicity binom(s1, 2i+1).  Filtered to the summands meeting [0, top]
// at degree n, like pair_twist_modules.
std::map<long, std::vector<long>> factorization_twist_modules(
    int s1, int d1, int d2, const HilbertData& hf, long n);

}  // namespace ezd
