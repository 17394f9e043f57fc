// Command-line front end: builds graded quotients from spec files, runs the
// pair/divisor checks, searches for linear exact zero divisors, assembles
// matrix factorizations, and exposes the combinatorial catalog.  Every
// command can emit a deterministic JSON report via --json.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ezd/algebra.hpp"
#include "ezd/catalog.hpp"
#include "ezd/criterion.hpp"
#include "ezd/error.hpp"
#include "ezd/factorization.hpp"
#include "ezd/pairs.hpp"
#include "ezd/parse.hpp"
#include "ezd/suite.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";
constexpr long kSearchBudget = 200000;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ezd::InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ezd::FieldSpec parse_field_name(const std::string& name) {
  if (name == "Q" || name == "q") return ezd::FieldSpec::rationals();
  std::string digits = name;
  if (digits.rfind("F_", 0) == 0 || digits.rfind("F ", 0) == 0)
    digits = digits.substr(2);
  else if (digits.rfind('F', 0) == 0)
    digits = digits.substr(1);
  try {
    std::size_t used = 0;
    long p = std::stol(digits, &used);
    if (used != digits.size()) throw std::invalid_argument(digits);
    return ezd::FieldSpec::prime(p);
  } catch (const std::exception&) {
    throw ezd::InputError("unrecognized field '" + name +
                          "' (use Q or a prime, e.g. F_32003)");
  }
}

ezd::Scalar convert_scalar(const ezd::Scalar& c, const ezd::FieldSpec& to) {
  if (c.field() == to) return c;
  if (to.kind == ezd::FieldKind::Rationals) {
    return ezd::Scalar::from_long(c.residue(), to);
  }
  const mpq_class& r = c.rat();
  ezd::Scalar num = ezd::Scalar::from_mpz(r.get_num(), to);
  ezd::Scalar den = ezd::Scalar::from_mpz(r.get_den(), to);
  if (den.is_zero())
    throw ezd::InputError("coefficient denominator vanishes modulo " +
                          std::to_string(to.modulus));
  return num / den;
}

ezd::Poly convert_poly(const ezd::Poly& f, const ezd::FieldSpec& to) {
  ezd::Poly out(f.vars(), to);
  for (const auto& [m, c] : f.terms()) out.add_term(m, convert_scalar(c, to));
  return out;
}

struct LoadedAlgebra {
  ezd::AlgebraSpec ambient;
  std::vector<ezd::Poly> reduce_forms;
  ezd::GradedAlgebra algebra;
};

LoadedAlgebra load_algebra(const std::string& path, const std::string& field,
                           int max_degree) {
  ezd::AlgebraFile file = ezd::read_algebra_file(slurp(path));
  if (!field.empty()) {
    ezd::FieldSpec target = parse_field_name(field);
    file.spec.field = target;
    for (ezd::Poly& g : file.spec.gens) g = convert_poly(g, target);
    for (ezd::Poly& f : file.reduce_forms) f = convert_poly(f, target);
  }
  if (max_degree > 0) file.spec.max_degree_bound = max_degree;

  ezd::AlgebraSpec final_spec = file.spec;
  if (!file.reduce_forms.empty())
    final_spec = ezd::reduce_linear(file.spec, file.reduce_forms);
  return LoadedAlgebra{file.spec, file.reduce_forms,
                       ezd::build_algebra(final_spec)};
}

std::vector<long> parse_long_list(const std::string& text,
                                  const std::string& what) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(item, &used));
      while (used < item.size() &&
             std::isspace(static_cast<unsigned char>(item[used])))
        ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ezd::InputError("malformed " + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw ezd::InputError(what + " list is empty");
  return out;
}

ezd::HilbertData parse_hf(const std::string& text) {
  ezd::HilbertData hf;
  hf.values = parse_long_list(text, "hilbert function");
  for (long v : hf.values)
    if (v < 0) throw ezd::InputError("hilbert function entries must be >= 0");
  if (hf.values.front() != 1)
    throw ezd::InputError("hilbert function must start with 1");
  return hf;
}

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

std::string yesno(bool b) { return b ? "yes" : "no"; }

// count each twist, ascending
json twist_histogram(const std::vector<long>& twists) {
  std::map<long, long> hist;
  for (long t : twists) ++hist[t];
  json out = json::object();
  for (const auto& [t, n] : hist) out[std::to_string(t)] = n;
  return out;
}

std::string twist_histogram_str(const std::vector<long>& twists) {
  std::map<long, long> hist;
  for (long t : twists) ++hist[t];
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, n] : hist) {
    if (!first) os << ", ";
    os << "S(" << t << ")^" << n;
    first = false;
  }
  return os.str();
}

struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  json provenance = json::object();

  void emit(bool as_json) const {
    if (!as_json) return;
    json report{{"command", command},
                {"inputs", inputs},
                {"results", results},
                {"provenance", provenance},
                {"version", kVersion}};
    std::cout << report.dump(2) << "\n";
  }
};

json socle_json(const ezd::SocleReport& soc) {
  return json{{"dims", soc.dims},
              {"type", soc.type},
              {"levelDegree", soc.level_degree},
              {"level", soc.level},
              {"gorenstein", soc.gorenstein}};
}

json min_gens_json(const std::map<int, long>& gens) {
  json out = json::object();
  for (const auto& [deg, count] : gens) out[std::to_string(deg)] = count;
  return out;
}

std::string min_gens_str(const std::map<int, long>& gens) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [deg, count] : gens) {
    if (!first) os << ",";
    os << deg << ":" << count;
    first = false;
  }
  return os.str();
}

json screening_json(const ezd::ScreeningReport& rep) {
  json rows = json::array();
  for (const ezd::ScreeningRow& row : rep.rows)
    rows.push_back(json{{"period", row.period},
                        {"residueSums", row.sums},
                        {"pass", row.pass}});
  return json{{"rows", rows},
              {"remaining", rep.remaining},
              {"noPairPossible", rep.no_pair_possible()}};
}

void print_screening(const ezd::ScreeningReport& rep) {
  for (const ezd::ScreeningRow& row : rep.rows)
    std::cout << "D=" << row.period << ": residue sums " << join_longs(row.sums)
              << " -> " << (row.pass ? "passes" : "fails") << "\n";
  if (rep.no_pair_possible())
    std::cout << "no exact pair is possible for any candidate degree sum\n";
  else {
    std::cout << "candidate degree sums remaining:";
    for (int d : rep.remaining) std::cout << " " << d;
    std::cout << "\n";
  }
}

int run_hf(const std::string& path, const std::string& field, int max_degree,
           bool as_json) {
  LoadedAlgebra la = load_algebra(path, field, max_degree);
  const ezd::GradedAlgebra& a = la.algebra;
  ezd::SocleReport soc = ezd::socle(a);
  std::map<int, long> gens = a.min_gen_degrees();

  Report rep;
  rep.command = "hf";
  rep.inputs = {{"file", path}};
  if (!field.empty()) rep.inputs["field"] = field;
  if (max_degree > 0) rep.inputs["maxDegree"] = max_degree;
  rep.results = {{"field", a.field().str()},
                 {"variables", a.vars().names()},
                 {"reduced", !la.reduce_forms.empty()},
                 {"hilbertFunction", a.hilbert().values},
                 {"topDegree", a.top_degree()},
                 {"totalDimension", a.hilbert().total()},
                 {"socle", socle_json(soc)},
                 {"minimalGenerators", min_gens_json(gens)}};

  if (!as_json) {
    std::cout << "ring: " << a.vars().size() << " variables over "
              << a.field().str() << "\n";
    std::cout << "hilbert function: " << a.hilbert().str() << "\n";
    std::cout << "top degree: " << a.top_degree() << "\n";
    std::cout << "socle type: " << soc.type << " (level: " << yesno(soc.level)
              << ", gorenstein: " << yesno(soc.gorenstein) << ")\n";
    std::cout << "minimal generator degrees: " << min_gens_str(gens) << "\n";
  }
  rep.emit(as_json);
  return 0;
}

int run_pair(const std::string& path, const std::string& theta1,
             const std::string& theta2, const std::string& expect,
             const std::string& field, int max_degree, bool as_json) {
  LoadedAlgebra la = load_algebra(path, field, max_degree);
  const ezd::GradedAlgebra& a = la.algebra;
  ezd::Poly t1 = ezd::parse_polynomial(theta1, a.vars(), a.field());
  ezd::Poly t2 = ezd::parse_polynomial(theta2, a.vars(), a.field());
  ezd::PairReport pr = ezd::verify_pair(a, t1, t2);

  Report rep;
  rep.command = "pair";
  rep.inputs = {{"file", path}, {"theta1", theta1}, {"theta2", theta2}};
  if (!expect.empty()) rep.inputs["expect"] = expect;
  rep.results = {{"exact", pr.exact},
                 {"degree1", pr.d1},
                 {"degree2", pr.d2},
                 {"productZero", pr.product_zero}};
  if (pr.first_failure) rep.results["firstFailure"] = *pr.first_failure;

  if (!as_json) {
    std::cout << "theta1: " << pr.theta1.str() << " (degree " << pr.d1
              << ")\n";
    std::cout << "theta2: " << pr.theta2.str() << " (degree " << pr.d2
              << ")\n";
    std::cout << "product zero in quotient: " << yesno(pr.product_zero)
              << "\n";
    std::cout << "exact pair: " << yesno(pr.exact);
    if (pr.first_failure)
      std::cout << " (first failing degree: " << *pr.first_failure << ")";
    std::cout << "\n";
  }

  if (pr.exact) {
    const int period = pr.d1 + pr.d2;
    ezd::DividesReport div = ezd::divides(a.hilbert(), period);
    const int s1 = static_cast<int>(a.hf(1));
    bool residuals = true;
    for (long n = 0; n < period; ++n)
      if (ezd::sigma_binomial_residual(a.hilbert(), period, s1, n) != 0)
        residuals = false;
    rep.results["degreeSum"] = period;
    rep.results["residueSums"] = div.sigma.sums;
    rep.results["divides"] = div.divides;
    rep.results["quotient"] = div.quotient;
    rep.results["residueCombinationsVanish"] = residuals;
    if (!as_json) {
      std::cout << "residue sums at D=" << period << ": "
                << join_longs(div.sigma.sums) << "\n";
      std::cout << "series divisor check (must hold): " << yesno(div.divides)
                << "\n";
      std::cout << "series quotient: " << join_longs(div.quotient) << "\n";
      std::cout << "residue combinations vanish: " << yesno(residuals) << "\n";
    }
  }
  rep.emit(as_json);

  if (!expect.empty()) {
    const bool want_exact = expect == "exact";
    if (pr.exact != want_exact) {
      std::cerr << "expected " << (want_exact ? "an exact pair" : "no pair")
                << ", found the opposite\n";
      return 3;
    }
  }
  return 0;
}

int run_search(const std::string& path, const std::string& field,
               int max_degree, bool deep, bool as_json) {
  LoadedAlgebra la = load_algebra(path, field, max_degree);
  const ezd::GradedAlgebra& a = la.algebra;

  ezd::SearchReport sr;
  if (a.field().kind == ezd::FieldKind::Rationals) {
    const std::size_t n = a.vars().size();
    if (n > 20) throw ezd::BoundError("too many variables for the 0/1 sweep");
    const long long count = (1LL << n) - 1;
    if (count > kSearchBudget && !deep)
      throw ezd::BoundError(
          "candidate count " + std::to_string(count) +
          " exceeds the default budget; pass --deep to run anyway");
    std::vector<ezd::Poly> candidates;
    candidates.reserve(static_cast<std::size_t>(count));
    for (long long mask = 1; mask <= count; ++mask) {
      ezd::Poly ell(a.vars(), a.field());
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1LL << i))
          ell = ell + ezd::Poly::variable(a.vars(), a.field(), i);
      candidates.push_back(ell);
    }
    sr = ezd::search_linear_ezd(a, candidates);
    sr.enumeration = "zero-one coefficient vectors over the rationals";
  } else {
    mpz_class count =
        ezd::projective_point_count(a.field().modulus, a.vars().size());
    if (count > kSearchBudget && !deep)
      throw ezd::BoundError(
          "candidate count " + count.get_str() +
          " exceeds the default budget; pass --deep to run anyway");
    sr = ezd::search_linear_ezd(a);
  }

  Report rep;
  rep.command = "ezd-search";
  rep.inputs = {{"file", path}};
  if (!field.empty()) rep.inputs["field"] = field;
  json hits = json::array();
  for (const ezd::SearchHit& hit : sr.hits)
    hits.push_back(
        json{{"theta", hit.theta.str()}, {"partner", hit.partner.str()}});
  rep.results = {{"candidatesExamined", sr.candidates_examined},
                 {"enumeration", sr.enumeration},
                 {"hits", hits}};

  if (!as_json) {
    std::cout << "enumeration: " << sr.enumeration << "\n";
    std::cout << "candidates examined: " << sr.candidates_examined << "\n";
    if (sr.hits.empty()) {
      std::cout << "no linear exact zero divisor found\n";
    } else {
      for (const ezd::SearchHit& hit : sr.hits)
        std::cout << "hit: " << hit.theta.str() << "  (partner "
                  << hit.partner.str() << ")\n";
    }
  }
  rep.emit(as_json);
  return 0;
}

int run_screen(const std::string& path, const std::string& hf_text,
               const std::string& candidates_text, const std::string& field,
               int max_degree, bool as_json) {
  if (path.empty() == hf_text.empty())
    throw ezd::InputError("pass exactly one of: a spec file, --hf");

  ezd::HilbertData hf;
  std::vector<int> candidates;
  Report rep;
  rep.command = "screen";

  if (!path.empty()) {
    LoadedAlgebra la = load_algebra(path, field, max_degree);
    hf = la.algebra.hilbert();
    for (const auto& [deg, count] : la.algebra.min_gen_degrees())
      candidates.push_back(deg);
    rep.inputs["file"] = path;
  } else {
    hf = parse_hf(hf_text);
    for (int d = 2; d <= hf.top_degree() + 1; ++d) candidates.push_back(d);
    rep.inputs["hf"] = hf_text;
  }
  if (!candidates_text.empty()) {
    candidates.clear();
    for (long d : parse_long_list(candidates_text, "candidate"))
      candidates.push_back(static_cast<int>(d));
    rep.inputs["candidates"] = candidates_text;
  }

  ezd::ScreeningReport sc = ezd::screen_periods(hf, candidates);
  rep.results = {{"hilbertFunction", hf.values},
                 {"screening", screening_json(sc)}};
  if (!as_json) {
    std::cout << "hilbert function: " << hf.str() << "\n";
    print_screening(sc);
  }
  rep.emit(as_json);
  return 0;
}

int run_sigma(const std::string& hf_text, int period, int s1, bool s1_given,
              long at, bool at_given, bool as_json) {
  ezd::HilbertData hf = parse_hf(hf_text);
  ezd::SigmaProfile prof = ezd::sigma_profile(hf, period);
  ezd::DividesReport div = ezd::divides(hf, period);

  Report rep;
  rep.command = "sigma";
  rep.inputs = {{"hf", hf_text}, {"period", period}};
  rep.results = {{"residueSums", prof.sums},
                 {"constant", prof.constant()},
                 {"divides", div.divides}};
  if (div.divides) rep.results["quotient"] = div.quotient;

  if (!as_json) {
    std::cout << "residue sums at D=" << period << ": "
              << join_longs(prof.sums) << "\n";
    std::cout << "constant: " << yesno(prof.constant()) << "\n";
    std::cout << "all-ones divisor of length " << period << " divides: "
              << yesno(div.divides) << "\n";
    if (div.divides)
      std::cout << "series quotient: " << join_longs(div.quotient) << "\n";
  }

  if (s1_given) {
    rep.inputs["s1"] = s1;
    json residuals = json::object();
    long lo = at_given ? at : 0;
    long hi = at_given ? at : period - 1;
    if (at_given) rep.inputs["at"] = at;
    for (long n = lo; n <= hi; ++n) {
      long long v = ezd::sigma_binomial_residual(hf, period, s1, n);
      residuals[std::to_string(n)] = v;
      if (!as_json)
        std::cout << "residue combination at N=" << n << ": " << v << "\n";
    }
    rep.results["residueCombinations"] = residuals;
  }
  rep.emit(as_json);
  return 0;
}

int run_mf(const std::string& path, const std::string& theta,
           const std::string& theta2, const std::string& field,
           int max_degree, bool as_json) {
  LoadedAlgebra la = load_algebra(path, field, max_degree);
  const ezd::GradedAlgebra& a = la.algebra;
  ezd::Poly t1 = ezd::parse_polynomial(theta, a.vars(), a.field());
  ezd::MatrixFactorization mf = ezd::build_factorization(a, t1);

  Report rep;
  rep.command = "mf";
  rep.inputs = {{"file", path}, {"theta", theta}};
  rep.results = {{"degree", mf.degree},
                 {"variablesEngaged", mf.nvars},
                 {"rank", mf.size()},
                 {"compositionIdentity", true},
                 {"twistsF", twist_histogram(mf.twists_f)},
                 {"twistsG", twist_histogram(mf.twists_g)}};

  if (!as_json) {
    std::cout << "theta: " << mf.theta.str() << " (degree " << mf.degree
              << ")\n";
    std::cout << "module rank: " << mf.size() << " (2^" << (mf.nvars - 1)
              << ")\n";
    std::cout << "composition identity in both orders: yes\n";
    std::cout << "twists of F: " << twist_histogram_str(mf.twists_f) << "\n";
    std::cout << "twists of G: " << twist_histogram_str(mf.twists_g) << "\n";
  }

  if (!theta2.empty()) {
    ezd::Poly t2 = ezd::parse_polynomial(theta2, a.vars(), a.field());
    ezd::PeriodicComplex pc = ezd::build_periodic_complex(a, t1, t2);
    const long reach = a.top_degree() + pc.period;
    ezd::StrandReport strands = ezd::check_strand_exactness(a, pc, -reach,
                                                            reach);
    rep.inputs["theta2"] = theta2;
    rep.results["complex"] =
        json{{"period", pc.period},
             {"evenTwists", twist_histogram(pc.layout.even_twists)},
             {"oddTwists", twist_histogram(pc.layout.odd_twists)},
             {"window", json::array({strands.n_lo, strands.n_hi})},
             {"compositesVanish",
              strands.primal.composite_zero && strands.dual.composite_zero},
             {"allStrandsExact", strands.all_exact},
             {"alternatingSumsZero", strands.alternating_sums_zero}};
    if (!as_json) {
      std::cout << "two-periodic complex with period " << pc.period << "\n";
      std::cout << "even modules: "
                << twist_histogram_str(pc.layout.even_twists) << "\n";
      std::cout << "odd modules: " << twist_histogram_str(pc.layout.odd_twists)
                << "\n";
      std::cout << "strand window: [" << strands.n_lo << ", " << strands.n_hi
                << "]\n";
      std::cout << "composites vanish: "
                << yesno(strands.primal.composite_zero &&
                         strands.dual.composite_zero)
                << "\n";
      std::cout << "all strands exact (complex and dual): "
                << yesno(strands.all_exact) << "\n";
      std::cout << "alternating dimension sums vanish: "
                << yesno(strands.alternating_sums_zero) << "\n";
    }
  }
  rep.emit(as_json);
  return 0;
}

int run_catalog_compressed(long c, long e, long r, bool as_json) {
  ezd::CompressedScreenReport sc = ezd::compressed_screen({c, e, r});
  Report rep;
  rep.command = "catalog compressed";
  rep.inputs = {{"c", c}, {"e", e}, {"r", r}};
  rep.results = {{"hilbertFunction", sc.hf.values},
                 {"firstGeneratorDegree", sc.first_gen_degree},
                 {"candidates", sc.candidates},
                 {"screening", screening_json(sc.screening)}};
  if (!as_json) {
    std::cout << "hilbert function: " << sc.hf.str() << "\n";
    std::cout << "first forced generator degree: " << sc.first_gen_degree
              << "\n";
    print_screening(sc.screening);
  }
  rep.emit(as_json);
  return 0;
}

int run_catalog_det(long r, long c, bool as_json) {
  ezd::HilbertData hf = ezd::determinantal_hs(r, c);
  long long signed_value = ezd::alternating_binomial_sum(r - 1, c - 1);
  long long absolute = ezd::n_ab(r - 1, c - 1);
  Report rep;
  rep.command = "catalog det";
  rep.inputs = {{"rows", r}, {"cols", c}};
  rep.results = {{"hilbertFunction", hf.values},
                 {"valueAtMinusOne", signed_value},
                 {"absoluteValue", absolute}};
  if (!as_json) {
    std::cout << "hilbert function: " << hf.str() << "\n";
    std::cout << "series value at -1: " << signed_value << "\n";
    std::cout << "absolute value (closed-form checked): " << absolute << "\n";
  }
  rep.emit(as_json);
  return 0;
}

int run_catalog_euler(long s, bool as_json) {
  std::vector<long long> poly = ezd::eulerian_polynomial(s);
  std::vector<long long> numbers = ezd::euler_numbers(s);
  long long at_minus_one = 0;
  long long total = 0;
  for (std::size_t k = 0; k < poly.size(); ++k) {
    total += poly[k];
    at_minus_one += (k % 2 == 0) ? poly[k] : -poly[k];
  }
  Report rep;
  rep.command = "catalog euler";
  rep.inputs = {{"s", s}};
  rep.results = {{"coefficients", poly},
                 {"coefficientSum", total},
                 {"valueAtMinusOne", at_minus_one},
                 {"zigzag", numbers.back()}};
  if (!as_json) {
    std::cout << "descent polynomial coefficients: " << join_lls(poly)
              << "\n";
    std::cout << "coefficient sum: " << total << "\n";
    std::cout << "value at -1: " << at_minus_one << "\n";
    std::cout << "zigzag number E_" << s << ": " << numbers.back() << "\n";
  }
  rep.emit(as_json);
  return 0;
}

int run_catalog_segre(long s, bool direct, std::uint64_t seed, bool as_json) {
  ezd::SegreSeries series = ezd::segre_hs(s);
  Report rep;
  rep.command = "catalog segre";
  rep.inputs = {{"s", s}};
  rep.results = {{"hilbertFunction", series.hf.values},
                 {"valueAtMinusOne", series.value_at_minus_one}};
  if (!as_json) {
    std::cout << "hilbert function: " << series.hf.str() << "\n";
    std::cout << "series value at -1: " << series.value_at_minus_one << "\n";
  }

  if (direct) {
    if (s != 3)
      throw ezd::InputError("the direct check is built for three factors");
    ezd::SegreCheckReport check = ezd::segre_direct_check(seed);
    rep.inputs["seed"] = seed;
    rep.provenance["paperExample"] = "segre3";
    rep.provenance["seed"] = check.seed;
    rep.results["direct"] =
        json{{"quadrics", check.quadric_count},
             {"quadricsIndependent", check.quadrics_independent},
             {"ambientDims", check.ambient_dims},
             {"reducedHilbertFunction", check.reduced_hf.values},
             {"matchesSeries", check.matches_series},
             {"gorenstein", check.socle.gorenstein},
             {"screening", screening_json(check.screening)},
             {"pass", check.pass}};
    if (!as_json) {
      std::cout << "defining quadrics: " << check.quadric_count
                << " (independent: " << yesno(check.quadrics_independent)
                << ")\n";
      std::cout << "coordinate ring dimensions 0-3: "
                << join_longs(check.ambient_dims) << "\n";
      std::cout << "reduced hilbert function (seed " << check.seed
                << "): " << check.reduced_hf.str() << "\n";
      std::cout << "matches the descent series: "
                << yesno(check.matches_series) << "\n";
      std::cout << "gorenstein: " << yesno(check.socle.gorenstein) << "\n";
      print_screening(check.screening);
      std::cout << "direct check: " << (check.pass ? "pass" : "fail") << "\n";
    }
    rep.emit(as_json);
    return check.pass ? 0 : 3;
  }
  rep.emit(as_json);
  return 0;
}

int run_catalog_nab(long a, long b, bool as_json) {
  long long signed_value = ezd::alternating_binomial_sum(a, b);
  long long absolute = ezd::n_ab(a, b);
  Report rep;
  rep.command = "catalog nab";
  rep.inputs = {{"a", a}, {"b", b}};
  rep.results = {{"signedSum", signed_value}, {"absoluteValue", absolute}};
  if (!as_json) {
    std::cout << "signed alternating sum: " << signed_value << "\n";
    std::cout << "absolute value (closed-form checked): " << absolute << "\n";
  }
  rep.emit(as_json);
  return 0;
}

int run_catalog_circulant(int b, int size, bool as_json) {
  ezd::CirculantReport cr = ezd::circulant_kernel_check(b, size);
  Report rep;
  rep.command = "catalog circulant";
  rep.inputs = {{"b", b}, {"B", size}};
  rep.results = {{"firstRow", cr.first_row},
                 {"rank", cr.rank},
                 {"kernelDim", cr.kernel_dim},
                 {"onesInKernel", cr.ones_in_kernel}};
  if (!as_json) {
    std::cout << "first row: " << join_lls(cr.first_row) << "\n";
    std::cout << "rank: " << cr.rank << " of " << cr.size << "\n";
    std::cout << "kernel dimension: " << cr.kernel_dim << "\n";
    std::cout << "all-ones vector spans the kernel: "
              << yesno(cr.ones_in_kernel) << "\n";
  }
  rep.emit(as_json);
  return 0;
}

int run_suite(bool list, const std::vector<std::string>& names,
              const std::string& corrupt, std::uint64_t seed, bool as_json) {
  if (list) {
    for (const std::string& name : ezd::suite_case_names())
      std::cout << name << "\n";
    return 0;
  }

  ezd::SuiteResult suite = ezd::run_example_suite(names, corrupt, seed);

  Report rep;
  rep.command = "paper-suite";
  if (!names.empty()) rep.inputs["cases"] = names;
  if (!corrupt.empty()) rep.inputs["corrupt"] = corrupt;
  rep.provenance["seed"] = seed;
  if (names.size() == 1) rep.provenance["paperExample"] = names.front();

  json cases = json::array();
  for (const ezd::CaseResult& c : suite.cases) {
    json checks = json::array();
    for (const ezd::CheckLine& line : c.checks)
      checks.push_back(json{{"label", line.label},
                            {"expected", line.expected},
                            {"actual", line.actual},
                            {"passed", line.passed}});
    cases.push_back(json{{"name", c.name},
                         {"passed", c.passed},
                         {"seeds", c.seeds},
                         {"checks", checks}});
  }
  json pairs = json::array();
  for (const ezd::VerifiedPair& p : suite.pairs)
    pairs.push_back(json{{"case", p.case_name},
                         {"theta1", p.theta1},
                         {"theta2", p.theta2},
                         {"degreeSum", p.d1 + p.d2},
                         {"divides", p.divides_ok},
                         {"residueCombinationsVanish", p.residuals_vanish}});
  rep.results = {{"cases", cases},
                 {"verifiedPairs", pairs},
                 {"allPassed", suite.all_passed}};

  if (!as_json) {
    for (const ezd::CaseResult& c : suite.cases) {
      std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << " ("
                << c.checks.size() << " checks)";
      if (!c.seeds.empty()) {
        std::cout << " seeds:";
        for (std::uint64_t s : c.seeds) std::cout << " " << s;
      }
      std::cout << "\n";
      for (const ezd::CheckLine& line : c.checks)
        if (!line.passed)
          std::cout << "  check '" << line.label << "': expected '"
                    << line.expected << "', got '" << line.actual << "'\n";
    }
    long consistent = 0;
    for (const ezd::VerifiedPair& p : suite.pairs)
      if (p.divides_ok && p.residuals_vanish) ++consistent;
    std::cout << "verified exact pairs: " << suite.pairs.size() << " ("
              << consistent << " satisfy the divisor and residue-sum laws)\n";
    std::cout << "suite: " << (suite.all_passed ? "PASS" : "FAIL") << "\n";
  }
  rep.emit(as_json);
  return suite.all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded quotient rings, exact zero divisor pairs, and their "
               "Hilbert series divisors"};
  app.require_subcommand(1);

  std::string file, field, theta1, theta2, theta, expect, hf_text;
  std::string candidates_text, corrupt;
  std::vector<std::string> case_names;
  int max_degree = 0;
  int period = 0, s1 = 0;
  int circ_b = 0, circ_size = 0;
  long at = 0;
  long par_c = 0, par_e = 0, par_r = 1;
  long det_r = 0, det_c = 0;
  long euler_s = 0, segre_s = 0;
  long nab_a = 0, nab_b = 0;
  std::uint64_t seed = 0;
  bool as_json = false, deep = false, direct = false, list = false;

  auto add_common = [&](CLI::App* cmd, bool with_field) {
    cmd->add_flag("--json", as_json, "emit the JSON report instead of text");
    if (with_field) {
      cmd->add_option("--field", field, "override the coefficient field");
      cmd->add_option("--max-degree", max_degree,
                      "override the degree bound of the build");
    }
  };

  CLI::App* hf_cmd =
      app.add_subcommand("hf", "Hilbert function and socle of a quotient");
  hf_cmd->add_option("file", file, "algebra spec file")->required();
  add_common(hf_cmd, true);

  CLI::App* pair_cmd = app.add_subcommand(
      "pair", "verify an exact pair of zero divisors degree by degree");
  pair_cmd->add_option("file", file)->required();
  pair_cmd->add_option("--theta1", theta1)->required();
  pair_cmd->add_option("--theta2", theta2)->required();
  pair_cmd->add_option("--expect", expect, "exact | none; mismatch exits 3")
      ->check(CLI::IsMember({"exact", "none"}));
  add_common(pair_cmd, true);

  CLI::App* search_cmd = app.add_subcommand(
      "ezd-search", "search linear forms for exact zero divisors");
  search_cmd->add_option("file", file)->required();
  search_cmd->add_flag("--deep", deep,
                       "run even when the candidate count is large");
  add_common(search_cmd, true);

  CLI::App* screen_cmd = app.add_subcommand(
      "screen", "rule out degree sums through the residue-sum divisor test");
  screen_cmd->add_option("file", file, "algebra spec file");
  screen_cmd->add_option("--hf", hf_text, "explicit hilbert function");
  screen_cmd->add_option("--candidates", candidates_text,
                         "comma-separated degree sums to test");
  add_common(screen_cmd, true);

  CLI::App* sigma_cmd = app.add_subcommand(
      "sigma", "residue-class sums and the alternating combinations");
  sigma_cmd->add_option("--hf", hf_text)->required();
  sigma_cmd->add_option("-D,--period", period)->required();
  CLI::Option* s1_opt = sigma_cmd->add_option("--s1", s1);
  CLI::Option* at_opt =
      sigma_cmd->add_option("-N,--at", at)->needs(s1_opt);
  add_common(sigma_cmd, false);

  CLI::App* mf_cmd = app.add_subcommand(
      "mf", "matrix factorization and the two-periodic complex");
  mf_cmd->add_option("file", file)->required();
  mf_cmd->add_option("--theta", theta)->required();
  mf_cmd->add_option("--theta2", theta2,
                     "partner element; adds the strand-exactness run");
  add_common(mf_cmd, true);

  CLI::App* cat = app.add_subcommand("catalog", "combinatorial families");
  cat->require_subcommand(1);
  CLI::App* cc = cat->add_subcommand("compressed",
                                     "compressed level algebra screen");
  cc->add_option("-c", par_c)->required();
  cc->add_option("-e", par_e)->required();
  cc->add_option("-r", par_r)->required();
  add_common(cc, false);
  CLI::App* cd = cat->add_subcommand("det", "2x2-minor determinantal series");
  cd->add_option("-r,--rows", det_r)->required();
  cd->add_option("-c,--cols", det_c)->required();
  add_common(cd, false);
  CLI::App* ce = cat->add_subcommand("euler", "descent polynomial and zigzag");
  ce->add_option("-s", euler_s)->required();
  add_common(ce, false);
  CLI::App* cs = cat->add_subcommand("segre", "descent series of the Segre");
  cs->add_option("-s", segre_s)->required();
  cs->add_flag("--direct", direct, "run the three-factor first-principles check");
  cs->add_option("--seed", seed, "seed of the random linear reduction");
  add_common(cs, false);
  CLI::App* cn = cat->add_subcommand("nab", "alternating binomial sums");
  cn->add_option("-a", nab_a)->required();
  cn->add_option("-b", nab_b)->required();
  add_common(cn, false);
  CLI::App* ci = cat->add_subcommand("circulant",
                                     "alternating-binomial circulant kernel");
  ci->add_option("-b", circ_b)->required();
  ci->add_option("-B,--size", circ_size)->required();
  add_common(ci, false);

  CLI::App* suite_cmd = app.add_subcommand(
      "paper-suite", "run the packaged examples against stored expectations");
  suite_cmd->add_flag("--list", list, "print the example names and exit");
  suite_cmd->add_option("--case", case_names, "run only the named examples");
  suite_cmd->add_option("--corrupt", corrupt,
                        "break one stored expectation (negative control)");
  suite_cmd->add_option("--seed", seed, "base seed for the randomized cases");
  add_common(suite_cmd, false);

  try {
    app.parse(argc, argv);

    if (hf_cmd->parsed()) return run_hf(file, field, max_degree, as_json);
    if (pair_cmd->parsed())
      return run_pair(file, theta1, theta2, expect, field, max_degree,
                      as_json);
    if (search_cmd->parsed())
      return run_search(file, field, max_degree, deep, as_json);
    if (screen_cmd->parsed())
      return run_screen(file, hf_text, candidates_text, field, max_degree,
                        as_json);
    if (sigma_cmd->parsed())
      return run_sigma(hf_text, period, s1, s1_opt->count() > 0, at,
                       at_opt->count() > 0, as_json);
    if (mf_cmd->parsed())
      return run_mf(file, theta, theta2, field, max_degree, as_json);
    if (cat->parsed()) {
      if (cc->parsed()) return run_catalog_compressed(par_c, par_e, par_r,
                                                      as_json);
      if (cd->parsed()) return run_catalog_det(det_r, det_c, as_json);
      if (ce->parsed()) return run_catalog_euler(euler_s, as_json);
      if (cs->parsed())
        return run_catalog_segre(segre_s, direct, seed, as_json);
      if (cn->parsed()) return run_catalog_nab(nab_a, nab_b, as_json);
      if (ci->parsed()) return run_catalog_circulant(circ_b, circ_size,
                                                     as_json);
    }
    if (suite_cmd->parsed())
      return run_suite(list, case_names, corrupt, seed, as_json);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const ezd::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ezd::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ezd::BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ezd::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
