#pragma once

#include <optional>

#include "ezd/algebra.hpp"

namespace ezd {

struct PairDegreeRow {
  int degree = 0;
  long ker1 = 0;  // dim of (0 : theta1) in this degree
  long im2 = 0;   // dim of theta2 * S landing in this degree
  long ker2 = 0;
  long im1 = 0;
};

struct PairReport {
  Poly theta1, theta2;
  int d1 = 0, d2 = 0;
  bool product_zero = false;
  std::vector<PairDegreeRow> per_degree;  // degrees 0..top
  bool exact = false;
  std::optional<int> first_failure;  // least degree where a dimension differs
};

// Checks in every degree that the kernel of multiplication by each element
// equals the image of multiplication by the other, and that the product is
// zero in the quotient.  Both elements must be homogeneous of positive
// degree and nonzero in the quotient.
PairReport verify_pair(const GradedAlgebra& a, const Poly& theta1,
                       const Poly& theta2);

// Kernel dimension of multiplication by theta, per source degree 0..top.
std::vector<long> annihilator_profile(const GradedAlgebra& a,
                                      const Poly& theta);

struct ExactDivisorReport {
  bool is_exact = false;
  int first_kernel_degree = -1;  // least degree with a nonzero kernel
  long first_kernel_dim = 0;
  std::optional<Poly> partner;  // candidate generator of the annihilator
  std::optional<PairReport> pair;
};

// Decides whether theta is an exact zero divisor: the annihilator must start
// with a one-dimensional piece whose generator is a partner making the pair
// check succeed.  When the first kernel piece has dimension != 1 the element
// is rejected without a pair check (the annihilator cannot be principal with
// the complementary Hilbert function).
ExactDivisorReport is_exact_zero_divisor(const GradedAlgebra& a,
                                         const Poly& theta);

struct SearchHit {
  Poly theta;
  Poly partner;
};

struct SearchReport {
  long long candidates_examined = 0;
  std::string enumeration;  // how the candidate list was produced
  std::vector<SearchHit> hits;
};

// Number of points of projective (n-1)-space over F_p: 1 + p + ... + p^{n-1}.
// Used by callers to gate exhaustive searches.
mpz_class projective_point_count(long p, std::size_t n);

// Exhaustive search for linear exact zero divisors over a prime field: every
// projective point, normalized so the first nonzero coordinate is 1, in
// odometer order.
SearchReport search_linear_ezd(const GradedAlgebra& a);

// Same decision procedure over an explicit candidate list (any field).
SearchReport search_linear_ezd(const GradedAlgebra& a,
                               const std::vector<Poly>& candidates);

}  // namespace ezd
