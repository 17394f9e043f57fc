#include "ezd/pairs.hpp"

#include <algorithm>

namespace ezd {

namespace {

std::vector<long> rank_profile(const GradedAlgebra& a, const GradedMap& gm) {
  std::vector<long> ranks;
  for (int d = 0; d <= a.top_degree(); ++d) {
    const Mat& m = gm.at(d);
    Eliminator el(a.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) el.absorb(m.row(r));
    ranks.push_back(static_cast<long>(el.rank()));
  }
  return ranks;
}

}  // namespace

PairReport verify_pair(const GradedAlgebra& a, const Poly& theta1,
                       const Poly& theta2) {
  GradedMap m1 = multiplication_map(a, theta1);
  GradedMap m2 = multiplication_map(a, theta2);

  PairReport rep;
  rep.theta1 = theta1;
  rep.theta2 = theta2;
  rep.d1 = m1.degree;
  rep.d2 = m2.degree;
  rep.product_zero = a.is_zero_in_quotient(theta1 * theta2);

  std::vector<long> r1 = rank_profile(a, m1);
  std::vector<long> r2 = rank_profile(a, m2);
  auto rank_at = [&](const std::vector<long>& r, int d) -> long {
    return (d < 0 || d > a.top_degree()) ? 0 : r[static_cast<std::size_t>(d)];
  };

  bool dims_ok = true;
  for (int d = 0; d <= a.top_degree(); ++d) {
    PairDegreeRow row;
    row.degree = d;
    row.ker1 = a.hf(d) - rank_at(r1, d);
    row.im2 = rank_at(r2, d - rep.d2);
    row.ker2 = a.hf(d) - rank_at(r2, d);
    row.im1 = rank_at(r1, d - rep.d1);
    rep.per_degree.push_back(row);
    if (row.ker1 != row.im2 || row.ker2 != row.im1) {
      dims_ok = false;
      if (!rep.first_failure) rep.first_failure = d;
    }
  }
  rep.exact = rep.product_zero && dims_ok;
  if (!rep.product_zero && !rep.first_failure) rep.first_failure = -1;
  return rep;
}

std::vector<long> annihilator_profile(const GradedAlgebra& a,
                                      const Poly& theta) {
  GradedMap gm = multiplication_map(a, theta);
  std::vector<long> ranks = rank_profile(a, gm);
  std::vector<long> out;
  for (int d = 0; d <= a.top_degree(); ++d)
    out.push_back(a.hf(d) - ranks[static_cast<std::size_t>(d)]);
  return out;
}

ExactDivisorReport is_exact_zero_divisor(const GradedAlgebra& a,
                                         const Poly& theta) {
  ExactDivisorReport rep;
  GradedMap gm = multiplication_map(a, theta);
  for (int d = 0; d <= a.top_degree(); ++d) {
    const Mat& m = gm.at(d);
    Eliminator el(a.field(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r) el.absorb(m.row(r));
    long ker = a.hf(d) - static_cast<long>(el.rank());
    if (ker == 0) continue;
    rep.first_kernel_degree = d;
    rep.first_kernel_dim = ker;
    break;
  }
  if (rep.first_kernel_degree < 0 || rep.first_kernel_dim != 1) return rep;

  Mat k = kernel_basis(gm.at(rep.first_kernel_degree));
  const auto& basis = a.std_monomials(rep.first_kernel_degree);
  Poly partner(a.vars(), a.field());
  for (std::size_t i = 0; i < k.rows(); ++i)
    if (!k.at(i, 0).is_zero()) partner.add_term(basis[i], k.at(i, 0));
  rep.partner = partner;
  rep.pair = verify_pair(a, theta, partner);
  rep.is_exact = rep.pair->exact;
  return rep;
}

mpz_class projective_point_count(long p, std::size_t n) {
  mpz_class total = 0;
  mpz_class power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total += power;
    power *= p;
  }
  return total;
}

namespace {

SearchReport search_candidates(const GradedAlgebra& a,
                               const std::vector<Poly>& candidates,
                               std::string enumeration) {
  SearchReport rep;
  rep.enumeration = std::move(enumeration);
  for (const Poly& theta : candidates) {
    ++rep.candidates_examined;
    if (theta.is_zero() || a.is_zero_in_quotient(theta)) continue;
    ExactDivisorReport r = is_exact_zero_divisor(a, theta);
    if (r.is_exact) rep.hits.push_back({theta, *r.partner});
  }
  return rep;
}

}  // namespace

SearchReport search_linear_ezd(const GradedAlgebra& a) {
  if (a.field().kind != FieldKind::PrimeField)
    throw InputError(
        "exhaustive linear search needs a finite field; pass explicit "
        "candidates over Q");
  const long p = a.field().modulus;
  const std::size_t n = a.vars().size();

  std::vector<Poly> candidates;
  // first nonzero coordinate fixed to 1, the remaining coordinates run
  // through all residues as a base-p odometer (last index least significant)
  auto increment = [p](std::vector<long>& tail) -> bool {
    for (std::size_t j = tail.size(); j-- > 0;) {
      if (++tail[j] < p) return true;
      tail[j] = 0;
    }
    return false;
  };
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<long> tail(n - lead - 1, 0);
    do {
      Poly theta = Poly::variable(a.vars(), a.field(), lead);
      for (std::size_t t = 0; t < tail.size(); ++t)
        if (tail[t] != 0)
          theta.add_term(Monomial::variable(n, lead + 1 + t),
                         Scalar::from_long(tail[t], a.field()));
      candidates.push_back(std::move(theta));
    } while (increment(tail));
  }
  return search_candidates(
      a, candidates,
      "projective points over F_" + std::to_string(p) + ", " +
          projective_point_count(p, n).get_str() + " candidates");
}

SearchReport search_linear_ezd(const GradedAlgebra& a,
                               const std::vector<Poly>& candidates) {
  return search_candidates(a, candidates, "supplied candidate list");
}

}  // namespace ezd
