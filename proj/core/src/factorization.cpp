#include "ezd/factorization.hpp"

#include <algorithm>
#include <bit>

#include "ezd/binomial.hpp"

namespace ezd {

namespace {

int popcount(std::uint32_t v) { return std::popcount(v); }

// (-1)^{#{t in T : t < v}}
int subset_sign(std::uint32_t t_mask, std::uint32_t v) {
  std::uint32_t below = t_mask & ((1u << v) - 1u);
  return popcount(below) % 2 == 0 ? 1 : -1;
}

std::vector<std::uint32_t> subsets_with_parity(int nvars, int parity) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask)
    if (popcount(mask) % 2 == parity) out.push_back(mask);
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

}  // namespace

std::vector<Poly> split_theta(const Poly& theta) {
  if (theta.is_zero() || !theta.is_homogeneous() || theta.degree() < 2)
    throw InputError("splitting needs a homogeneous element of degree >= 2");
  const std::size_t n = theta.vars().size();
  std::vector<Poly> y(n, Poly(theta.vars(), theta.field()));
  for (const auto& [m, c] : theta.terms()) {
    std::size_t head = n;
    for (std::size_t i = 0; i < n; ++i)
      if (m.exp(i) > 0) {
        head = i;
        break;
      }
    std::vector<int> rest = m.exps();
    rest[head] -= 1;
    y[head].add_term(Monomial(rest), c);
  }
  return y;
}

MatrixFactorization build_factorization(const GradedAlgebra& a,
                                        const Poly& theta) {
  if (theta.vars() != a.vars() || theta.field() != a.field())
    throw InputError("element does not live in this algebra's ambient ring");
  if (theta.is_zero() || !theta.is_homogeneous() || theta.degree() < 2)
    throw InputError(
        "the factorization needs a homogeneous element of degree >= 2");
  if (a.is_zero_in_quotient(theta))
    throw InputError("element '" + theta.str() + "' is zero in the quotient");
  if (a.vars().size() > 20)
    throw BoundError("factorization limited to 20 variables (2^19 summands)");

  MatrixFactorization mf;
  mf.theta = theta;
  mf.degree = theta.degree();
  mf.nvars = static_cast<int>(a.vars().size());
  mf.y = split_theta(theta);
  mf.even_subsets = subsets_with_parity(mf.nvars, 0);
  mf.odd_subsets = subsets_with_parity(mf.nvars, 1);

  const std::size_t half = mf.even_subsets.size();
  std::vector<std::size_t> even_pos(1u << mf.nvars, 0), odd_pos(1u << mf.nvars, 0);
  for (std::size_t i = 0; i < mf.even_subsets.size(); ++i)
    even_pos[mf.even_subsets[i]] = i;
  for (std::size_t i = 0; i < mf.odd_subsets.size(); ++i)
    odd_pos[mf.odd_subsets[i]] = i;

  const VarSet& vars = a.vars();
  const FieldSpec& field = a.field();
  Poly zero(vars, field);
  mf.m.assign(mf.odd_subsets.size() * half, zero);
  mf.mcheck.assign(half * mf.odd_subsets.size(), zero);

  auto fill_column = [&](std::uint32_t t_mask, std::size_t col,
                         std::vector<Poly>& matrix,
                         const std::vector<std::size_t>& target_pos,
                         std::size_t width) {
    for (std::size_t v = 0; v < vars.size(); ++v) {
      std::uint32_t bit = 1u << v;
      int sign = subset_sign(t_mask, static_cast<std::uint32_t>(v));
      Poly entry(vars, field);
      std::uint32_t target;
      if (t_mask & bit) {
        entry = Poly::variable(vars, field, v);
        target = t_mask ^ bit;
      } else {
        if (mf.y[v].is_zero()) continue;
        entry = mf.y[v];
        target = t_mask | bit;
      }
      if (sign < 0) entry = -entry;
      matrix[target_pos[target] * width + col] = entry;
    }
  };

  for (std::size_t c = 0; c < mf.even_subsets.size(); ++c)
    fill_column(mf.even_subsets[c], c, mf.m, odd_pos, half);
  for (std::size_t c = 0; c < mf.odd_subsets.size(); ++c)
    fill_column(mf.odd_subsets[c], c, mf.mcheck, even_pos,
                mf.odd_subsets.size());

  for (std::size_t es = 0; es < mf.even_subsets.size(); ++es) {
    long i = popcount(mf.even_subsets[es]) / 2;
    mf.twists_f.push_back(i * (mf.degree - 2));
  }
  for (std::size_t os = 0; os < mf.odd_subsets.size(); ++os) {
    long i = popcount(mf.odd_subsets[os]) / 2;
    mf.twists_g.push_back(i * (mf.degree - 2) + mf.degree - 1);
  }

  // composition oracle: both products must equal theta times the identity
  auto check_product = [&](const std::vector<Poly>& left,
                           const std::vector<Poly>& right, std::size_t nl,
                           std::size_t nm, const char* which) {
    for (std::size_t i = 0; i < nl; ++i)
      for (std::size_t j = 0; j < nl; ++j) {
        Poly acc(vars, field);
        for (std::size_t k = 0; k < nm; ++k)
          acc = acc + left[i * nm + k] * right[k * nl + j];
        const bool diag = i == j;
        if ((diag && !(acc == theta)) || (!diag && !acc.is_zero()))
          throw InternalError(std::string("factorization oracle failed for ") +
                              which);
      }
  };
  check_product(mf.mcheck, mf.m, half, mf.odd_subsets.size(), "M^ * M");
  check_product(mf.m, mf.mcheck, mf.odd_subsets.size(), half, "M * M^");
  return mf;
}

PeriodicComplex build_periodic_complex(const GradedAlgebra& a,
                                       const Poly& theta1,
                                       const Poly& theta2) {
  PairReport pr = verify_pair(a, theta1, theta2);
  if (!pr.exact)
    throw InputError("the two elements do not form an exact pair");

  PeriodicComplex pc;
  pc.mf = build_factorization(a, theta1);
  pc.theta2 = theta2;
  pc.d2 = theta2.degree();
  pc.period = pc.mf.degree + pc.d2;

  TwoPeriodicLayout& l = pc.layout;
  l.period = pc.period;
  l.even_twists = pc.mf.twists_f;
  l.odd_twists = pc.mf.twists_g;
  l.phi = pc.mf.m;
  l.psi.reserve(pc.mf.mcheck.size());
  for (const Poly& e : pc.mf.mcheck) l.psi.push_back(e * theta2);

  TwoPeriodicLayout& d = pc.dual;
  d.period = pc.period;
  for (long a_t : l.even_twists) d.even_twists.push_back(-a_t);
  for (long b_t : l.odd_twists) d.odd_twists.push_back(pc.period - b_t);
  // transposed matrices change roles: the dual phi is psi^T, the dual psi is
  // phi^T
  const std::size_t ne = l.even_twists.size();
  const std::size_t no = l.odd_twists.size();
  d.phi.assign(no * ne, Poly(a.vars(), a.field()));
  d.psi.assign(ne * no, Poly(a.vars(), a.field()));
  for (std::size_t r = 0; r < ne; ++r)
    for (std::size_t c = 0; c < no; ++c)
      d.phi[c * ne + r] = l.psi[r * no + c];
  for (std::size_t r = 0; r < no; ++r)
    for (std::size_t c = 0; c < ne; ++c)
      d.psi[c * no + r] = l.phi[r * ne + c];
  return pc;
}

namespace {

class StrandChecker {
 public:
  StrandChecker(const GradedAlgebra& a, const TwoPeriodicLayout& l)
      : a_(a), l_(l) {}

  long dim_even(long nu) const {
    long acc = 0;
    for (long t : l_.even_twists) acc += a_.hf(static_cast<int>(nu + t));
    return acc;
  }
  long dim_odd(long nu) const {
    long acc = 0;
    for (long t : l_.odd_twists) acc += a_.hf(static_cast<int>(nu + t));
    return acc;
  }

  // phi at internal shift nu: sources [S]_{nu + even_twists}, targets
  // [S]_{nu + odd_twists}
  Mat phi_matrix(long nu) const {
    return assemble(nu, l_.even_twists, l_.odd_twists, l_.phi,
                    /*source_shift=*/0);
  }
  // psi at internal shift nu: sources [S]_{nu - D + odd_twists}, targets
  // [S]_{nu + even_twists}
  Mat psi_matrix(long nu) const {
    return assemble(nu, l_.odd_twists, l_.even_twists, l_.psi,
                    /*source_shift=*/-l_.period);
  }

  long rank_phi(long nu) {
    auto it = phi_rank_.find(nu);
    if (it != phi_rank_.end()) return it->second;
    long r = static_cast<long>(rank_of(phi_matrix(nu)));
    phi_rank_[nu] = r;
    return r;
  }
  long rank_psi(long nu) {
    auto it = psi_rank_.find(nu);
    if (it != psi_rank_.end()) return it->second;
    long r = static_cast<long>(rank_of(psi_matrix(nu)));
    psi_rank_[nu] = r;
    return r;
  }

 private:
  Mat assemble(long nu, const std::vector<long>& src_twists,
               const std::vector<long>& dst_twists,
               const std::vector<Poly>& entries, long source_shift) const {
    std::vector<long> src_deg, dst_deg;
    std::vector<std::size_t> src_off, dst_off;
    std::size_t cols = 0, rows = 0;
    for (long t : src_twists) {
      src_deg.push_back(nu + source_shift + t);
      src_off.push_back(cols);
      cols += static_cast<std::size_t>(
          a_.hf(static_cast<int>(src_deg.back())));
    }
    for (long t : dst_twists) {
      dst_deg.push_back(nu + t);
      dst_off.push_back(rows);
      rows += static_cast<std::size_t>(
          a_.hf(static_cast<int>(dst_deg.back())));
    }

    Mat m(a_.field(), rows, cols);
    const std::size_t width = src_twists.size();
    for (std::size_t sb = 0; sb < src_twists.size(); ++sb) {
      long sd = src_deg[sb];
      if (sd < 0 || sd > a_.top_degree()) continue;
      const auto& basis = a_.std_monomials(static_cast<int>(sd));
      for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t db = 0; db < dst_twists.size(); ++db) {
          const Poly& entry = entries[db * width + sb];
          if (entry.is_zero()) continue;
          long dd = dst_deg[db];
          if (dd < 0 || dd > a_.top_degree()) continue;
          Poly moved(a_.vars(), a_.field());
          for (const auto& [mm, cc] : entry.terms())
            moved.add_term(mm * basis[j], cc);
          std::vector<Scalar> coords = a_.normal_form(moved);
          for (std::size_t i = 0; i < coords.size(); ++i)
            m.at(dst_off[db] + i, src_off[sb] + j) = coords[i];
        }
      }
    }
    return m;
  }

  const GradedAlgebra& a_;
  const TwoPeriodicLayout& l_;
  std::map<long, long> phi_rank_, psi_rank_;
};

// entries of both composites must vanish in the quotient
bool symbolic_composites_zero(const GradedAlgebra& a,
                              const TwoPeriodicLayout& l) {
  const std::size_t ne = l.even_twists.size();
  const std::size_t no = l.odd_twists.size();
  for (std::size_t i = 0; i < ne; ++i)
    for (std::size_t j = 0; j < ne; ++j) {
      Poly acc(a.vars(), a.field());
      for (std::size_t k = 0; k < no; ++k)
        acc = acc + l.psi[i * no + k] * l.phi[k * ne + j];
      if (!a.is_zero_in_quotient(acc)) return false;
    }
  for (std::size_t i = 0; i < no; ++i)
    for (std::size_t j = 0; j < no; ++j) {
      Poly acc(a.vars(), a.field());
      for (std::size_t k = 0; k < ne; ++k)
        acc = acc + l.phi[i * ne + k] * l.psi[k * no + j];
      if (!a.is_zero_in_quotient(acc)) return false;
    }
  return true;
}

StrandSideReport check_side(const GradedAlgebra& a,
                            const TwoPeriodicLayout& l, long n_lo,
                            long n_hi) {
  StrandSideReport rep;
  StrandChecker chk(a, l);
  const long period = l.period;

  long max_twist = 0;
  for (long t : l.even_twists) max_twist = std::max(max_twist, std::abs(t));
  for (long t : l.odd_twists) max_twist = std::max(max_twist, std::abs(t));
  const long top = a.top_degree();

  rep.composite_zero = symbolic_composites_zero(a, l);
  rep.all_exact = true;

  for (long n = n_lo; n <= n_hi; ++n) {
    long pmin = -((max_twist + top + std::abs(n)) / period + 2);
    long pmax = (max_twist + top + std::abs(n)) / period + 2;
    for (long p = pmin; p <= pmax; ++p) {
      long nu = n - p * period;
      long de = chk.dim_even(nu);
      if (de > 0) {
        StrandPosition pos;
        pos.n = n;
        pos.index = 2 * p;
        pos.dim = de;
        pos.rank_in = chk.rank_psi(nu);
        pos.rank_out = chk.rank_phi(nu);
        pos.exact = de == pos.rank_in + pos.rank_out;
        if (!pos.exact) rep.all_exact = false;
        rep.positions.push_back(pos);
      }
      long dodd = chk.dim_odd(nu);
      if (dodd > 0) {
        StrandPosition pos;
        pos.n = n;
        pos.index = 2 * p - 1;
        pos.dim = dodd;
        pos.rank_in = chk.rank_phi(nu);
        pos.rank_out = chk.rank_psi(nu + period);
        pos.exact = dodd == pos.rank_in + pos.rank_out;
        if (!pos.exact) rep.all_exact = false;
        rep.positions.push_back(pos);
      }
    }
  }
  std::sort(rep.positions.begin(), rep.positions.end(),
            [](const StrandPosition& x, const StrandPosition& y) {
              return x.n != y.n ? x.n < y.n : x.index < y.index;
            });

  if (!rep.composite_zero) {
    rep.all_exact = false;
    // hunt a concrete strand witness: a position whose two consecutive
    // differentials do not compose to zero
    for (long n = n_lo; n <= n_hi && !rep.witness; ++n) {
      long pmin = -((max_twist + top + std::abs(n)) / period + 2);
      long pmax = (max_twist + top + std::abs(n)) / period + 2;
      for (long p = pmin; p <= pmax && !rep.witness; ++p) {
        long nu = n - p * period;
        if (chk.dim_even(nu) > 0) {
          Mat prod = chk.psi_matrix(nu + period) * chk.phi_matrix(nu);
          if (!prod.is_zero()) {
            rep.witness = {n, 2 * p};
            break;
          }
        }
        if (chk.dim_odd(nu - period) > 0) {
          Mat prod = chk.phi_matrix(nu) * chk.psi_matrix(nu);
          if (!prod.is_zero()) rep.witness = {n, 2 * p + 1};
        }
      }
    }
  }
  return rep;
}

}  // namespace

StrandReport check_strand_exactness(const GradedAlgebra& a,
                                    const PeriodicComplex& pc, long n_lo,
                                    long n_hi) {
  if (n_lo > n_hi) throw InputError("empty strand window");
  StrandReport rep;

  long max_twist = 0;
  for (long t : pc.layout.even_twists)
    max_twist = std::max(max_twist, std::abs(t));
  for (long t : pc.layout.odd_twists)
    max_twist = std::max(max_twist, std::abs(t));
  const long limit = a.top_degree() + max_twist + 2 * pc.period;
  rep.n_lo = std::max(n_lo, -limit);
  rep.n_hi = std::min(n_hi, limit);
  rep.clamped = rep.n_lo != n_lo || rep.n_hi != n_hi;

  rep.primal = check_side(a, pc.layout, rep.n_lo, rep.n_hi);
  rep.dual = check_side(a, pc.dual, rep.n_lo, rep.n_hi);

  auto layout_sum = [&](const TwoPeriodicLayout& l, long nu) -> long long {
    long long even = 0, odd = 0;
    for (long t : l.even_twists) even += a.hf(static_cast<int>(nu + t));
    for (long t : l.odd_twists) odd += a.hf(static_cast<int>(nu + t));
    return even - odd;
  };
  rep.alternating_sums_zero = true;
  for (long n = rep.n_lo; n <= rep.n_hi; ++n) {
    long pmin = -((max_twist + a.top_degree() + std::abs(n)) / pc.period + 2);
    long pmax = (max_twist + a.top_degree() + std::abs(n)) / pc.period + 2;
    long long primal_sum = 0, dual_sum = 0;
    for (long p = pmin; p <= pmax; ++p) {
      primal_sum += layout_sum(pc.layout, n - p * pc.period);
      dual_sum += layout_sum(pc.dual, n - p * pc.period);
    }
    rep.alternating_sums.emplace_back(n, primal_sum);
    if (primal_sum != 0 || dual_sum != 0) rep.alternating_sums_zero = false;
  }

  rep.all_exact = rep.primal.all_exact && rep.dual.all_exact &&
                  rep.primal.composite_zero && rep.dual.composite_zero &&
                  rep.alternating_sums_zero;
  return rep;
}

}  // namespace ezd
