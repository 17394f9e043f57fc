#include "ezd/suite.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "ezd/binomial.hpp"
#include "ezd/error.hpp"
#include "ezd/fixtures.hpp"
#include "ezd/matrix.hpp"
#include "ezd/parse.hpp"

namespace ezd {

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string join_lls(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

std::string gen_degrees_str(const std::map<int, long>& m) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, count] : m) {
    if (!first) os << ",";
    os << deg << ":" << count;
    first = false;
  }
  return os.str();
}

// Collects labelled expected/actual lines; when the case is the corruption
// target, the first stored expectation is broken on purpose.
class Recorder {
 public:
  Recorder(CaseResult& out, bool corrupt_first)
      : out_(out), corrupt_(corrupt_first) {}

  void expect(const std::string& label, std::string expected,
              const std::string& actual) {
    if (corrupt_ && out_.checks.empty())
      expected = (expected == "yes") ? "no" : expected + "?";
    CheckLine line;
    line.label = label;
    line.expected = std::move(expected);
    line.actual = actual;
    line.passed = line.expected == line.actual;
    out_.checks.push_back(std::move(line));
  }

  void expect_yes(const std::string& label, bool ok) {
    expect(label, "yes", yesno(ok));
  }

 private:
  CaseResult& out_;
  bool corrupt_;
};

// Closes out one verified pair: the degree-sum divisor must go in evenly and
// the alternating residue-sum combination must vanish.  Both values are
// periodic in N with period d1 + d2, so a window of three periods covers
// every integer.
VerifiedPair close_pair(const std::string& case_name, const HilbertData& hf,
                        const PairReport& pr) {
  VerifiedPair v;
  v.case_name = case_name;
  v.theta1 = pr.theta1.str();
  v.theta2 = pr.theta2.str();
  v.d1 = pr.d1;
  v.d2 = pr.d2;
  v.hf = hf;
  const int period = pr.d1 + pr.d2;
  v.divides_ok = divides(hf, period).divides;
  v.residuals_vanish = true;
  const int s1 = static_cast<int>(hf.at(1));
  for (long n = -period; n <= 2L * period; ++n)
    if (sigma_binomial_residual(hf, period, s1, n) != 0)
      v.residuals_vanish = false;
  return v;
}

void record_pair(SuiteResult& suite, Recorder& rec,
                 const std::string& case_name, const HilbertData& hf,
                 const PairReport& pr) {
  VerifiedPair v = close_pair(case_name, hf, pr);
  rec.expect_yes("pair satisfies divisor and residue-sum laws",
                 v.divides_ok && v.residuals_vanish);
  suite.pairs.push_back(std::move(v));
}

void run_may4(SuiteResult& suite, Recorder& rec, std::uint64_t /*seed*/,
              std::vector<std::uint64_t>& /*seeds*/) {
  const FieldSpec q = FieldSpec::rationals();
  GradedAlgebra a = build_algebra(example_may4(q));
  rec.expect("hilbert function", "1,5,11,21,29,28,22,12,3",
             a.hilbert().str());
  rec.expect("minimal generator degrees", "2:4,4:7",
             gen_degrees_str(a.min_gen_degrees()));

  Poly t1 = parse_polynomial("x^2+y^2-z^2-w^2", a.vars(), q);
  Poly t2 = parse_polynomial("x^2+y^2+z^2+w^2", a.vars(), q);
  PairReport pr = verify_pair(a, t1, t2);
  rec.expect_yes("quadric pair is exact", pr.exact);

  // the product must contribute a fresh generator in degree four on top of
  // everything the quadric generators already span there
  {
    std::vector<Monomial> basis = monomials_of_degree(a.vars().size(), 4);
    Eliminator elim(q, basis.size());
    for (const Monomial& m : monomials_of_degree(a.vars().size(), 2)) {
      Poly mp(a.vars(), q);
      mp.add_term(m, Scalar::one(q));
      for (const Poly& g : a.spec().gens)
        if (g.degree() == 2) elim.absorb((mp * g).coefficient_vector(basis));
    }
    rec.expect_yes("pair product is a minimal generator",
                   elim.absorb((t1 * t2).coefficient_vector(basis)));
  }

  rec.expect("residue sums at period 4", "33,33,33,33",
             join_longs(sigma_profile(a.hilbert(), 4).sums));
  DividesReport div = divides(a.hilbert(), 4);
  rec.expect_yes("all-ones quartic divides the series", div.divides);
  rec.expect("series quotient", "1,4,6,10,9,3", join_longs(div.quotient));
  record_pair(suite, rec, "may4", a.hilbert(), pr);

  // degree-one sweep: every 0/1 coefficient vector fails over Q
  long misses = 0;
  std::vector<Poly> zero_one;
  for (unsigned mask = 1; mask < 32; ++mask) {
    Poly ell(a.vars(), q);
    for (std::size_t i = 0; i < 5; ++i)
      if (mask & (1u << i))
        ell = ell + Poly::variable(a.vars(), q, i);
    if (!is_exact_zero_divisor(a, ell).is_exact) ++misses;
    zero_one.push_back(std::move(ell));
  }
  rec.expect("zero-one linear candidates failing", "31 of 31",
             std::to_string(misses) + " of 31");
  SearchReport srq = search_linear_ezd(a, zero_one);
  rec.expect("candidate-list search over the rationals", "0 hits of 31",
             std::to_string(srq.hits.size()) + " hits of " +
                 std::to_string(srq.candidates_examined));

  // over the binary field the picture changes: sums of variables whose
  // fourth powers all lie in the ideal become exact zero divisors with
  // partner ell^3, because squaring is additive there
  GradedAlgebra a2 = build_algebra(example_may4(FieldSpec::prime(2)));
  SearchReport sr = search_linear_ezd(a2);
  {
    std::ostringstream hits;
    for (const SearchHit& hit : sr.hits) {
      if (!hits.str().empty()) hits << "; ";
      hits << hit.theta.str();
    }
    rec.expect("characteristic-two linear divisors",
               "x+y+z; x+y+z+t; x+y+z+w; x+y+z+w+t", hits.str());
  }
  bool cube_partners = !sr.hits.empty();
  for (const SearchHit& hit : sr.hits) {
    if (a2.normal_form_poly(hit.theta.pow(3)) !=
        a2.normal_form_poly(hit.partner))
      cube_partners = false;
    PairReport hp = verify_pair(a2, hit.theta, hit.partner);
    if (hp.exact)
      suite.pairs.push_back(close_pair("may4", a2.hilbert(), hp));
    else
      cube_partners = false;
  }
  rec.expect_yes("each binary-field partner is the cube of its divisor",
                 cube_partners);
}

void run_minor_reductions(SuiteResult&, Recorder& rec, const char* hf_expected,
                          std::size_t rows, std::size_t cols, int size,
                          int reduce_count, int period,
                          const char* sigma_expected, std::uint64_t seed,
                          std::vector<std::uint64_t>& seeds) {
  const FieldSpec f = FieldSpec::prime(32003);
  AlgebraSpec ambient = generic_minors(rows, cols, size, f);
  for (int trial = 0; trial < 3; ++trial) {
    ReductionResult red =
        random_artinian_reduction(ambient, reduce_count, seed + trial);
    seeds.push_back(red.seed);
    const std::string tag = "seed " + std::to_string(red.seed) + ": ";
    rec.expect(tag + "hilbert function", hf_expected,
               red.algebra.hilbert().str());
    rec.expect(tag + "residue sums at period " + std::to_string(period),
               sigma_expected,
               join_longs(sigma_profile(red.algebra.hilbert(), period).sums));
    std::vector<int> candidates;
    for (const auto& [deg, count] : red.algebra.min_gen_degrees())
      candidates.push_back(deg);
    rec.expect_yes(
        tag + "generator degree " + std::to_string(size) + " is a candidate",
        std::find(candidates.begin(), candidates.end(), size) !=
            candidates.end());
    rec.expect_yes(tag + "screen rules out every candidate",
                   screen_periods(red.algebra.hilbert(), candidates)
                       .no_pair_possible());
  }
}

void run_may5(SuiteResult& suite, Recorder& rec, std::uint64_t seed,
              std::vector<std::uint64_t>& seeds) {
  run_minor_reductions(suite, rec, "1,6,21,16,6", 4, 5, 3, 14, 3, "17,12,21",
                       seed + 1101, seeds);
}

void run_may6(SuiteResult& suite, Recorder& rec, std::uint64_t seed,
              std::vector<std::uint64_t>& seeds) {
  run_minor_reductions(suite, rec, "1,4,10,20,10,4,1", 5, 5, 4, 21, 4,
                       "11,8,11,20", seed + 1201, seeds);
}

void run_e3(SuiteResult& suite, Recorder& rec, std::uint64_t /*seed*/,
            std::vector<std::uint64_t>& /*seeds*/) {
  const FieldSpec q = FieldSpec::rationals();
  GradedAlgebra a = build_algebra(example_e3gor(q));
  rec.expect("hilbert function", "1,3,3,1", a.hilbert().str());
  SocleReport soc = socle(a);
  rec.expect_yes("gorenstein", soc.gorenstein);

  Poly x = Poly::variable(a.vars(), q, 0);
  PairReport pr = verify_pair(a, x, x);
  rec.expect_yes("(x, x) is an exact pair", pr.exact);
  rec.expect("residue sums at period 2", "4,4",
             join_longs(sigma_profile(a.hilbert(), 2).sums));
  DividesReport div = divides(a.hilbert(), 2);
  rec.expect_yes("all-ones quadratic divides the series", div.divides);
  rec.expect("series quotient", "1,2,1", join_longs(div.quotient));
  record_pair(suite, rec, "e3", a.hilbert(), pr);

  // over F_3 the exhaustive search also certifies two-variable combinations
  GradedAlgebra a3 = build_algebra(example_e3gor(FieldSpec::prime(3)));
  SearchReport sr = search_linear_ezd(a3);
  bool vars_found = false;
  {
    std::size_t named = 0;
    for (const SearchHit& hit : sr.hits) {
      const std::string s = hit.theta.str();
      if (s == "x" || s == "y" || s == "z") ++named;
    }
    vars_found = named == 3;
  }
  rec.expect("linear hits over F_3", "9 of 13",
             std::to_string(sr.hits.size()) + " of " +
                 std::to_string(sr.candidates_examined));
  rec.expect_yes("every variable is among the hits", vars_found);
  for (const SearchHit& hit : sr.hits) {
    PairReport hp = verify_pair(a3, hit.theta, hit.partner);
    if (hp.exact)
      suite.pairs.push_back(close_pair("e3", a3.hilbert(), hp));
  }
}

void run_rem7_5(SuiteResult& suite, Recorder& rec, std::uint64_t /*seed*/,
                std::vector<std::uint64_t>& /*seeds*/) {
  const FieldSpec q = FieldSpec::rationals();
  GradedAlgebra a = build_algebra(example_rem75(q));
  rec.expect("hilbert function", "1,3,6,6,3,1", a.hilbert().str());
  rec.expect_yes("gorenstein", socle(a).gorenstein);
  rec.expect("matches the compressed shape for c=3, e=5, r=1",
             compressed_hf({3, 5, 1}).str(), a.hilbert().str());
  rec.expect("minimal generator degrees", "3:4,4:1",
             gen_degrees_str(a.min_gen_degrees()));
  std::vector<int> candidates;
  for (const auto& [deg, count] : a.min_gen_degrees())
    candidates.push_back(deg);
  rec.expect_yes("screen rules out every candidate",
                 screen_periods(a.hilbert(), candidates).no_pair_possible());
  (void)suite;
}

void run_gl4(SuiteResult&, Recorder& rec, std::uint64_t /*seed*/,
             std::vector<std::uint64_t>& /*seeds*/) {
  CompressedScreenReport n3 = compressed_screen({4, 4, 1});
  rec.expect("hilbert function for c=4, e=4, r=1", "1,4,10,4,1", n3.hf.str());
  rec.expect("first forced generator degree", "3",
             std::to_string(n3.first_gen_degree));
  rec.expect_yes("screen rules out every candidate",
                 n3.screening.no_pair_possible());
  rec.expect("compressed shape for c=4, e=6, r=1 (the next minor size up)",
             "1,4,10,20,10,4,1", compressed_hf({4, 6, 1}).str());
}

void run_segre3(SuiteResult&, Recorder& rec, std::uint64_t seed,
                std::vector<std::uint64_t>& seeds) {
  SegreCheckReport rep = segre_direct_check(seed + 1301);
  seeds.push_back(rep.seed);
  rec.expect("independent defining quadrics", "9",
             std::to_string(rep.quadric_count) +
                 (rep.quadrics_independent ? "" : " (dependent)"));
  rec.expect("coordinate ring dimensions in degrees 0-3", "1,8,27,64",
             join_longs(rep.ambient_dims));
  rec.expect("reduced hilbert function", "1,4,1", rep.reduced_hf.str());
  SegreSeries series = segre_hs(3);
  rec.expect("series through the cube of descents", series.hf.str(),
             rep.reduced_hf.str());
  rec.expect("series value at -1", "-2",
             std::to_string(series.value_at_minus_one));
  rec.expect_yes("gorenstein", rep.socle.gorenstein);
  rec.expect_yes("screen rules out every candidate",
                 rep.screening.no_pair_possible());
}

void run_det_2x2(SuiteResult&, Recorder& rec, std::uint64_t seed,
                 std::vector<std::uint64_t>& seeds) {
  const FieldSpec f = FieldSpec::prime(32003);
  AlgebraSpec ambient = generic_minors(2, 3, 2, f);
  rec.expect("minor generators", "3", std::to_string(ambient.gens.size()));
  ReductionResult red = random_artinian_reduction(ambient, 4, seed + 1401);
  seeds.push_back(red.seed);
  rec.expect("reduced hilbert function", determinantal_hs(2, 3).str(),
             red.algebra.hilbert().str());
  rec.expect("series value at -1", "-1",
             std::to_string(alternating_binomial_sum(1, 2)));
  rec.expect("absolute value against the closed form", "1",
             std::to_string(n_ab(1, 2)));
  std::vector<int> candidates;
  for (const auto& [deg, count] : red.algebra.min_gen_degrees())
    candidates.push_back(deg);
  rec.expect_yes("screen rules out every candidate",
                 screen_periods(red.algebra.hilbert(), candidates)
                     .no_pair_possible());
}

void run_circulant(SuiteResult&, Recorder& rec, std::uint64_t /*seed*/,
                   std::vector<std::uint64_t>& /*seeds*/) {
  long checked = 0;
  long good = 0;
  for (int b = 1; b <= 8; ++b) {
    for (int size = 9; size <= 24; ++size) {
      CirculantReport cr = circulant_kernel_check(b, size);
      ++checked;
      if (cr.rank == size - 1 && cr.kernel_dim == 1 && cr.ones_in_kernel)
        ++good;
    }
  }
  rec.expect("corank-one circulants with all-ones kernel", "128 of 128",
             std::to_string(good) + " of " + std::to_string(checked));
}

void run_euler(SuiteResult&, Recorder& rec, std::uint64_t /*seed*/,
               std::vector<std::uint64_t>& /*seeds*/) {
  const std::vector<std::string> table{
      "1", "0,1", "0,1,1", "0,1,4,1", "0,1,11,11,1", "0,1,26,66,26,1"};
  for (long s = 0; s <= 5; ++s)
    rec.expect("descent polynomial s=" + std::to_string(s), table[s],
               join_lls(eulerian_polynomial(s)));

  bool sums_ok = true;
  for (long s = 0; s <= 10; ++s) {
    long long sum = 0;
    for (long long c : eulerian_polynomial(s)) sum += c;
    if (sum != factorial_ll(static_cast<int>(s))) sums_ok = false;
  }
  rec.expect_yes("coefficients sum to s! through s=10", sums_ok);

  bool series_ok = true;
  for (long s = 0; s <= 8; ++s) {
    std::vector<long long> rec_route = eulerian_polynomial(s);
    std::vector<long long> ser_route = eulerian_from_series(s, 12);
    for (std::size_t k = 0; k < ser_route.size(); ++k) {
      long long want = k < rec_route.size() ? rec_route[k] : 0;
      if (ser_route[k] != want) series_ok = false;
    }
  }
  rec.expect_yes("series route matches the recurrence through s=8",
                 series_ok);

  std::vector<long long> e = euler_numbers(9);
  rec.expect("zigzag numbers through 9", "1,1,1,2,5,16,61,272,1385,7936",
             join_lls(e));

  bool minus_one_ok = true;
  for (long s = 1; s <= 9; ++s) {
    long long v = 0;
    std::vector<long long> a = eulerian_polynomial(s);
    for (std::size_t k = 0; k < a.size(); ++k)
      v += (k % 2 == 0) ? a[k] : -a[k];
    if (s % 2 == 1 && std::llabs(v) != e[static_cast<std::size_t>(s)])
      minus_one_ok = false;
    if (s % 2 == 0 && v != 0) minus_one_ok = false;
  }
  rec.expect_yes("values at -1 are zigzag numbers up to sign", minus_one_ok);

  bool closed_ok = true;
  for (long a = 0; a <= 12; ++a)
    for (long b = a; b <= a + 3; ++b)
      (void)n_ab(a, b);  // throws InternalError on any closed-form mismatch
  rec.expect_yes("alternating binomial closed forms through a=12", closed_ok);

  bool zero_divides = true;
  for (long a = 1; a <= 10; ++a)
    for (long b = a; b <= 40; ++b)
      if (n_ab(a, b) == 0 &&
          factorial_ll(static_cast<int>(a)) % b != 0)
        zero_divides = false;
  rec.expect_yes("vanishing sums force b to divide a!", zero_divides);
}

using CaseFn = void (*)(SuiteResult&, Recorder&, std::uint64_t,
                        std::vector<std::uint64_t>&);

const std::vector<std::pair<std::string, CaseFn>>& case_table() {
  static const std::vector<std::pair<std::string, CaseFn>> table{
      {"may4", run_may4},         {"may5", run_may5},
      {"may6", run_may6},         {"e3", run_e3},
      {"rem7_5", run_rem7_5},     {"gl4", run_gl4},
      {"segre3", run_segre3},     {"det_2x2", run_det_2x2},
      {"circulant", run_circulant}, {"euler", run_euler}};
  return table;
}

}  // namespace

std::vector<std::string> suite_case_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : case_table()) names.push_back(name);
  return names;
}

SuiteResult run_example_suite(const std::vector<std::string>& names,
                              const std::string& corrupt,
                              std::uint64_t base_seed) {
  std::vector<std::string> selected = names;
  if (selected.empty()) selected = suite_case_names();

  if (!corrupt.empty()) {
    bool known = false;
    for (const auto& [name, fn] : case_table())
      if (name == corrupt) known = true;
    if (!known) throw InputError("unknown example name: " + corrupt);
  }

  SuiteResult suite;
  for (const std::string& name : selected) {
    CaseFn fn = nullptr;
    for (const auto& [nm, f] : case_table())
      if (nm == name) fn = f;
    if (fn == nullptr) throw InputError("unknown example name: " + name);

    CaseResult result;
    result.name = name;
    Recorder rec(result, corrupt == name);
    try {
      fn(suite, rec, base_seed, result.seeds);
    } catch (const std::exception& e) {
      rec.expect("completed without errors", "yes", e.what());
    }
    result.passed = true;
    for (const CheckLine& line : result.checks)
      if (!line.passed) result.passed = false;
    suite.cases.push_back(std::move(result));
  }

  suite.all_passed = true;
  for (const CaseResult& c : suite.cases)
    if (!c.passed) suite.all_passed = false;
  for (const VerifiedPair& p : suite.pairs)
    if (!p.divides_ok || !p.residuals_vanish) suite.all_passed = false;
  return suite;
}

}  // namespace ezd
