#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "ezd/pairs.hpp"

namespace ezd {

// Splits a homogeneous element of degree d >= 2 as theta = sum_i x_i y_i by
// assigning each term to its smallest-index variable.  Entries for variables
// that head no term are zero.
std::vector<Poly> split_theta(const Poly& theta);

// Subset-indexed square-root factorization of multiplication by theta: the
// free modules are indexed by even and odd subsets of the variable indices
// (sorted by size, then bitmask), and both maps act by signed contraction
// with x_t plus signed wedge with y_j,
//
//   e_T  |->  sum_{t in T}     sign(t, T) x_t e_{T - t}
//           + sum_{j notin T}  sign(j, T) y_j e_{T + j}
//
// with sign(v, T) = (-1)^{#{t in T : t < v}}.  The compositions in both
// orders equal theta times the identity, which is asserted at build time.
struct MatrixFactorization {
  Poly theta;
  int degree = 0;   // d
  int nvars = 0;    // s1
  std::vector<Poly> y;                   // the splitting, one entry per variable
  std::vector<std::uint32_t> even_subsets;
  std::vector<std::uint32_t> odd_subsets;
  std::vector<Poly> m;        // |odd| x |even|, row-major: even -> odd
  std::vector<Poly> mcheck;   // |even| x |odd|, row-major: odd -> even
  std::vector<long> twists_f;  // S(a) twist per even subset, a = i(d-2) for size 2i
  std::vector<long> twists_g;  // per odd subset, a = i(d-2)+d-1 for size 2i+1

  std::size_t size() const { return even_subsets.size(); }  // 2^{s1-1}
  const Poly& m_at(std::size_t row, std::size_t col) const {
    return m[row * even_subsets.size() + col];
  }
  const Poly& mcheck_at(std::size_t row, std::size_t col) const {
    return mcheck[row * odd_subsets.size() + col];
  }
};

// Builds the factorization and asserts the composition oracle M^ M = M M^ =
// theta * I as ambient polynomials.  Throws InputError when theta is not
// homogeneous of degree >= 2 or is zero in the quotient.
MatrixFactorization build_factorization(const GradedAlgebra& a,
                                        const Poly& theta);

// A two-periodic layout of twisted free modules with polynomial entry
// matrices: index 2p carries the even twists shifted by -pD, index 2p-1 the
// odd twists shifted by -pD; phi maps index 2p to 2p-1, psi maps 2p+1 to 2p.
struct TwoPeriodicLayout {
  int period = 0;  // D
  std::vector<long> even_twists;  // template at p = 0
  std::vector<long> odd_twists;
  std::vector<Poly> phi;  // |odd| x |even|
  std::vector<Poly> psi;  // |even| x |odd|

  const Poly& phi_at(std::size_t row, std::size_t col) const {
    return phi[row * even_twists.size() + col];
  }
  const Poly& psi_at(std::size_t row, std::size_t col) const {
    return psi[row * odd_twists.size() + col];
  }
};

// The two-periodic complex of an exact pair built on the factorization of
// theta1: phi acts by M and psi by theta2 * M^.  The dual layout carries the
// negated even twists and D-minus the odd twists, with the two transposed
// matrices swapped.
struct PeriodicComplex {
  MatrixFactorization mf;
  Poly theta2;
  int d2 = 0;
  int period = 0;  // d1 + d2
  TwoPeriodicLayout layout;
  TwoPeriodicLayout dual;
};

// Verifies the pair first (throws InputError when it is not exact), then
// assembles the complex.
PeriodicComplex build_periodic_complex(const GradedAlgebra& a,
                                       const Poly& theta1, const Poly& theta2);

struct StrandPosition {
  long n = 0;      // strand degree
  long index = 0;  // homological index
  long dim = 0;
  long rank_in = 0;
  long rank_out = 0;
  bool exact = false;
};

struct StrandSideReport {
  bool composite_zero = false;  // entries of both composites vanish in S
  std::optional<std::pair<long, long>> witness;  // (n, index) when they do not
  std::vector<StrandPosition> positions;         // nonzero positions in window
  bool all_exact = false;
};

struct StrandReport {
  long n_lo = 0, n_hi = 0;
  bool clamped = false;
  StrandSideReport primal, dual;
  std::vector<std::pair<long, long long>> alternating_sums;  // per strand degree
  bool alternating_sums_zero = false;
  bool all_exact = false;
};

// Checks exactness of every strand of the complex (and of its dual) for
// strand degrees in [n_lo, n_hi]: rank additivity at each position, vanishing
// composites, and zero alternating sums.  Windows reaching beyond the
// periodic support are clamped.
StrandReport check_strand_exactness(const GradedAlgebra& a,
                                    const PeriodicComplex& pc, long n_lo,
                                    long n_hi);

}  // namespace ezd
