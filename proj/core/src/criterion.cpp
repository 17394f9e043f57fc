#include "ezd/criterion.hpp"

#include <algorithm>

#include "ezd/binomial.hpp"
#include "ezd/matrix.hpp"

namespace ezd {

bool SigmaProfile::constant() const {
  return std::all_of(sums.begin(), sums.end(),
                     [&](long v) { return v == sums.front(); });
}

SigmaProfile sigma_profile(const HilbertData& hf, int period) {
  if (period < 1) throw InputError("period must be positive");
  SigmaProfile p;
  p.period = period;
  p.sums.assign(static_cast<std::size_t>(period), 0);
  for (int d = 0; d <= hf.top_degree(); ++d)
    p.sums[static_cast<std::size_t>(d % period)] += hf.at(d);
  return p;
}

DividesReport divides(const HilbertData& hf, int period) {
  DividesReport rep;
  rep.period = period;
  rep.sigma = sigma_profile(hf, period);
  rep.sigma_constant = rep.sigma.constant();

  // long division of hf by the monic 1 + t + ... + t^{period-1}
  std::vector<long> rem(hf.values);
  int top = hf.top_degree();
  int dtop = period - 1;
  rep.division_exact = true;
  if (top >= dtop) {
    rep.quotient.assign(static_cast<std::size_t>(top - dtop) + 1, 0);
    for (int d = top; d >= dtop; --d) {
      long c = rem[static_cast<std::size_t>(d)];
      if (c == 0) continue;
      rep.quotient[static_cast<std::size_t>(d - dtop)] = c;
      for (int k = 0; k <= dtop; ++k)
        rem[static_cast<std::size_t>(d - dtop + k)] -= c;
    }
  }
  for (long v : rem)
    if (v != 0) rep.division_exact = false;
  if (rem.empty()) rep.division_exact = true;

  if (rep.division_exact != rep.sigma_constant)
    throw InternalError(
        "divisibility routes disagree: residue sums vs long division");
  rep.divides = rep.division_exact;
  if (!rep.divides) rep.quotient.clear();
  return rep;
}

ScreeningReport screen_periods(const HilbertData& hf,
                               const std::vector<int>& candidates) {
  ScreeningReport rep;
  for (int period : candidates) {
    DividesReport d = divides(hf, period);
    rep.rows.push_back({period, d.sigma.sums, d.divides});
    if (d.divides) rep.remaining.push_back(period);
  }
  return rep;
}

std::vector<int> default_candidates(const HilbertData& hf) {
  int top = hf.top_degree();
  long nvars = hf.at(1);
  if (nvars < 1) return {};
  int first = top + 1;
  for (int d = 2; d <= top; ++d)
    if (hf.at(d) < monomial_count(static_cast<std::size_t>(nvars), d)) {
      first = d;
      break;
    }
  std::vector<int> out;
  for (int d = first; d <= top + 1; ++d) out.push_back(d);
  return out;
}

long long sigma_binomial_residual(const HilbertData& hf, int period, int s1,
                                  long n) {
  if (period < 1) throw InputError("period must be positive");
  if (s1 < 0) throw InputError("s1 must be nonnegative");
  SigmaProfile p = sigma_profile(hf, period);
  auto sigma_at = [&](long k) -> long {
    long r = k % period;
    if (r < 0) r += period;
    return p.sums[static_cast<std::size_t>(r)];
  };
  long long acc = 0;
  for (int l = 0; l <= s1; ++l) {
    long long term = binom_ll(s1, l) * sigma_at(n - l);
    acc += (l % 2 == 0) ? term : -term;
  }
  return acc;
}

CirculantReport circulant_kernel_check(int b, int size) {
  if (b < 1 || size <= b)
    throw InputError("circulant check needs 1 <= b < size");
  CirculantReport rep;
  rep.window = b;
  rep.size = size;
  rep.first_row.assign(static_cast<std::size_t>(size), 0);
  for (int i = 0; i <= b; ++i)
    rep.first_row[static_cast<std::size_t>(i)] =
        (i % 2 == 0 ? 1 : -1) * binom_ll(b, i);

  FieldSpec q = FieldSpec::rationals();
  Mat m(q, static_cast<std::size_t>(size), static_cast<std::size_t>(size));
  for (int r = 0; r < size; ++r)
    for (int j = 0; j < size; ++j)
      m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) =
          Scalar::from_long(
              static_cast<long>(rep.first_row[static_cast<std::size_t>(
                  ((j - r) % size + size) % size)]),
              q);

  rep.rank = static_cast<long>(rank_of(m));
  rep.kernel_dim = size - rep.rank;

  // row sums vanish exactly when the all-ones vector lies in the kernel
  rep.ones_in_kernel = true;
  for (int r = 0; r < size; ++r) {
    Scalar s = Scalar::zero(q);
    for (int j = 0; j < size; ++j)
      s += m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(j));
    if (!s.is_zero()) rep.ones_in_kernel = false;
  }
  return rep;
}

long long strand_alternating_sum(
    const std::map<long, std::vector<long>>& modules, const HilbertData& hf,
    long n) {
  long long acc = 0;
  for (const auto& [index, twists] : modules) {
    long long piece = 0;
    for (long a : twists) piece += hf.at(static_cast<int>(n + a));
    acc += (index % 2 == 0) ? piece : -piece;
  }
  return acc;
}

std::map<long, std::vector<long>> pair_twist_modules(int d1, int d2,
                                                     const HilbertData& hf,
                                                     long n) {
  if (d1 < 1 || d2 < 1) throw InputError("pair degrees must be positive");
  const long period = d1 + d2;
  const long top = hf.top_degree();
  std::map<long, std::vector<long>> out;
  auto meets = [&](long a) { return n + a >= 0 && n + a <= top; };
  // even indices 2p twist -pD; odd indices 2p-1 twist d1-pD, p over all of Z;
  // only finitely many twists can meet [0, top]
  long pmin = -(std::abs(n) + top + period + d1) / period - 2;
  long pmax = (std::abs(n) + top + period + d1) / period + 2;
  for (long p = pmin; p <= pmax; ++p) {
    long even_twist = -p * period;
    if (meets(even_twist)) out[2 * p].push_back(even_twist);
    long odd_twist = d1 - p * period;
    if (meets(odd_twist)) out[2 * p - 1].push_back(odd_twist);
  }
  return out;
}

std::map<long, std::vector<long>> factorization_twist_modules(
    int s1, int d1, int d2, const HilbertData& hf, long n) {
  if (s1 < 1) throw InputError("need at least one linear variable");
  if (d1 < 2 || d2 < 1) throw InputError("need d1 >= 2 and d2 >= 1");
  const long period = d1 + d2;
  const long top = hf.top_degree();
  std::map<long, std::vector<long>> out;
  auto meets = [&](long a) { return n + a >= 0 && n + a <= top; };
  long spread = static_cast<long>(s1) * (d1 + 2);
  long pmin = -(std::abs(n) + top + period + spread) / period - 2;
  long pmax = (std::abs(n) + top + period + spread) / period + 2;
  for (long p = pmin; p <= pmax; ++p) {
    for (int i = 0; 2 * i <= s1; ++i) {
      long tw = static_cast<long>(i) * (d1 - 2) - p * period;
      if (!meets(tw)) continue;
      long long mult = binom_ll(s1, 2 * i);
      auto& bucket = out[2 * p];
      for (long long m = 0; m < mult; ++m) bucket.push_back(tw);
    }
    for (int i = 0; 2 * i + 1 <= s1; ++i) {
      long tw = static_cast<long>(i) * (d1 - 2) + d1 - 1 - p * period;
      if (!meets(tw)) continue;
      long long mult = binom_ll(s1, 2 * i + 1);
      auto& bucket = out[2 * p - 1];
      for (long long m = 0; m < mult; ++m) bucket.push_back(tw);
    }
  }
  return out;
}

}  // namespace ezd
