#include "ezd/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include <gmpxx.h>

#include "ezd/binomial.hpp"
#include "ezd/error.hpp"
#include "ezd/fixtures.hpp"
#include "ezd/matrix.hpp"

namespace ezd {

HilbertData compressed_hf(const CompressedParams& p) {
  if (p.c < 1 || p.e < 1 || p.r < 1)
    throw InputError("compressed parameters must be positive");
  HilbertData hf;
  hf.values.reserve(static_cast<std::size_t>(p.e) + 1);
  for (long i = 0; i <= p.e; ++i) {
    long long full = binom_ll(i + p.c - 1, p.c - 1);
    long long dual = p.r * binom_ll(p.e - i + p.c - 1, p.c - 1);
    hf.values.push_back(static_cast<long>(std::min(full, dual)));
  }
  return hf;
}

CompressedScreenReport compressed_screen(const CompressedParams& p) {
  CompressedScreenReport rep;
  rep.params = p;
  rep.hf = compressed_hf(p);

  rep.first_gen_degree = static_cast<int>(p.e) + 1;
  for (long i = 1; i <= p.e; ++i) {
    if (rep.hf.at(static_cast<int>(i)) < binom_ll(i + p.c - 1, p.c - 1)) {
      rep.first_gen_degree = static_cast<int>(i);
      break;
    }
  }
  for (int d = rep.first_gen_degree; d <= p.e + 1; ++d)
    rep.candidates.push_back(d);
  rep.screening = screen_periods(rep.hf, rep.candidates);
  return rep;
}

HilbertData determinantal_hs(long r, long c) {
  if (r < 2 || r > c)
    throw InputError("determinantal series needs 2 <= rows <= cols");
  HilbertData hf;
  for (long i = 0; i <= r - 1; ++i)
    hf.values.push_back(
        static_cast<long>(binom_ll(r - 1, i) * binom_ll(c - 1, i)));
  return hf;
}

long long alternating_binomial_sum(long a, long b) {
  if (a < 0 || b < 0) throw InputError("binomial sum needs a, b >= 0");
  long long acc = 0;
  for (long i = 0; i <= a; ++i) {
    long long term = binom_ll(a, i) * binom_ll(b, i);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

long long n_ab(long a, long b) {
  if (a < 0 || b < a) throw InputError("n_ab needs 0 <= a <= b");
  long long brute = std::llabs(alternating_binomial_sum(a, b));

  if (b - a <= 3) {
    const bool odd = (a % 2 != 0);
    long long closed = 0;
    switch (b - a) {
      case 0:
        closed = odd ? 0 : binom_ll(a, a / 2);
        break;
      case 1:
        closed = odd ? binom_ll(a, (a - 1) / 2) : binom_ll(a, a / 2);
        break;
      case 2:
        closed = odd ? 2 * binom_ll(a, (a - 1) / 2)
                     : binom_ll(a, a / 2) - binom_ll(a, (a - 2) / 2);
        break;
      default:
        closed = odd ? 3 * binom_ll(a, (a - 1) / 2) - binom_ll(a, (a - 3) / 2)
                     : std::llabs(binom_ll(a, a / 2) -
                                  3 * binom_ll(a, (a - 2) / 2));
        break;
    }
    if (closed != brute)
      throw InternalError("alternating binomial sum disagrees with its closed form");
  }
  return brute;
}

std::vector<long long> eulerian_polynomial(long s) {
  if (s < 0 || s > 20)
    throw InputError("Eulerian coefficients supported for 0 <= s <= 20");
  std::vector<long long> a{1};
  for (long n = 1; n <= s; ++n) {
    std::vector<long long> next(static_cast<std::size_t>(n) + 1, 0);
    for (long k = 0; k <= n; ++k) {
      long long carry = 0;
      if (k < n) carry += k * a[static_cast<std::size_t>(k)];
      if (k >= 1) carry += (n - k + 1) * a[static_cast<std::size_t>(k) - 1];
      next[static_cast<std::size_t>(k)] = carry;
    }
    a = std::move(next);
  }
  return a;
}

std::vector<long long> eulerian_from_series(long s, long truncation) {
  if (s < 0) throw InputError("series route needs s >= 0");
  if (truncation < s)
    throw InputError("series truncation must reach degree s");

  // power sums overflow 64 bits well before the coefficients do, so the
  // series is expanded over arbitrary precision integers
  std::vector<mpz_class> series;
  for (long i = 0; i <= truncation; ++i) {
    mpz_class v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(i),
                  static_cast<unsigned long>(s));
    series.push_back(v);
  }

  std::vector<mpz_class> out(series.size(), 0);
  for (long k = 0; k <= s + 1 && k <= truncation; ++k) {
    mpz_class coeff;
    mpz_bin_uiui(coeff.get_mpz_t(), static_cast<unsigned long>(s + 1),
                 static_cast<unsigned long>(k));
    if (k % 2 != 0) coeff = -coeff;
    for (long d = k; d <= truncation; ++d)
      out[static_cast<std::size_t>(d)] +=
          coeff * series[static_cast<std::size_t>(d - k)];
  }

  std::vector<long long> result;
  result.reserve(out.size());
  for (const mpz_class& v : out) {
    if (!v.fits_slong_p())
      throw InternalError("series coefficient exceeds 64 bits");
    result.push_back(v.get_si());
  }
  return result;
}

std::vector<long long> euler_numbers(long up_to) {
  if (up_to < 0 || up_to > 25)
    throw InputError("zigzag numbers supported for 0 <= s <= 25");
  std::vector<long long> e{1};
  if (up_to >= 1) e.push_back(1);
  for (long s = 1; s + 1 <= up_to; ++s) {
    __int128 acc = 0;
    for (long k = 0; k <= s; ++k)
      acc += static_cast<__int128>(binom_ll(s, k)) *
             e[static_cast<std::size_t>(k)] *
             e[static_cast<std::size_t>(s - k)];
    acc /= 2;
    if (acc > static_cast<__int128>(std::numeric_limits<long long>::max()))
      throw InternalError("zigzag number exceeds 64 bits");
    e.push_back(static_cast<long long>(acc));
  }
  return e;
}

SegreSeries segre_hs(long s) {
  if (s < 1) throw InputError("Segre series needs at least one factor");
  SegreSeries out;
  out.s = s;
  std::vector<long long> a = eulerian_polynomial(s);
  for (long i = 1; i <= s; ++i)
    out.hf.values.push_back(static_cast<long>(a[static_cast<std::size_t>(i)]));
  long long at_minus_one = 0;
  for (std::size_t k = 0; k < a.size(); ++k)
    at_minus_one += (k % 2 == 0) ? a[k] : -a[k];
  out.value_at_minus_one = -at_minus_one;
  return out;
}

SegreCheckReport segre_direct_check(std::uint64_t seed) {
  SegreCheckReport rep;
  rep.seed = seed;

  const FieldSpec field = FieldSpec::prime(32003);
  AlgebraSpec ambient = example_segre_cube(field);
  const std::size_t n = ambient.vars.size();

  // dimension count of the coordinate ring in degrees 0..3: span the ideal
  // degree by degree and subtract the rank from the full polynomial ring
  rep.quadric_count = static_cast<long>(ambient.gens.size());
  rep.ambient_dims = {1, static_cast<long>(n)};
  {
    std::vector<Monomial> basis2 = monomials_of_degree(n, 2);
    Eliminator elim2(field, basis2.size());
    for (const Poly& g : ambient.gens)
      elim2.absorb(g.coefficient_vector(basis2));
    rep.quadrics_independent =
        elim2.rank() == static_cast<long>(ambient.gens.size());
    rep.ambient_dims.push_back(static_cast<long>(basis2.size()) -
                               elim2.rank());

    std::vector<Monomial> basis3 = monomials_of_degree(n, 3);
    Eliminator elim3(field, basis3.size());
    for (std::size_t v = 0; v < n; ++v) {
      Poly xv = Poly::variable(ambient.vars, field, v);
      for (const Poly& g : ambient.gens)
        elim3.absorb((xv * g).coefficient_vector(basis3));
    }
    rep.ambient_dims.push_back(static_cast<long>(basis3.size()) -
                               elim3.rank());
  }

  ReductionResult red = random_artinian_reduction(ambient, 4, seed);
  rep.reduced_hf = red.algebra.hilbert();
  rep.matches_series = rep.reduced_hf.values == segre_hs(3).hf.values;
  rep.socle = socle(red.algebra);

  std::vector<int> candidates;
  for (const auto& [deg, count] : red.algebra.min_gen_degrees())
    candidates.push_back(deg);
  rep.screening = screen_periods(rep.reduced_hf, candidates);

  rep.pass = rep.quadrics_independent && rep.quadric_count == 9 &&
             rep.ambient_dims == std::vector<long>{1, 8, 27, 64} &&
             rep.matches_series && rep.socle.gorenstein &&
             rep.screening.no_pair_possible();
  return rep;
}

}  // namespace ezd
