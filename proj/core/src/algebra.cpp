#include "ezd/algebra.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "ezd/parse.hpp"

namespace ezd {

namespace {

std::string pack_exps(const std::vector<int>& e) {
  std::string key(e.size() * 2, '\0');
  for (std::size_t i = 0; i < e.size(); ++i) {
    key[2 * i] = static_cast<char>(e[i] & 0xff);
    key[2 * i + 1] = static_cast<char>((e[i] >> 8) & 0xff);
  }
  return key;
}

std::vector<std::pair<std::size_t, Scalar>> sparse_row(
    const std::vector<Scalar>& dense) {
  std::vector<std::pair<std::size_t, Scalar>> out;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (!dense[j].is_zero()) out.emplace_back(j, dense[j]);
  return out;
}

}  // namespace

long HilbertData::total() const {
  long t = 0;
  for (long v : values) t += v;
  return t;
}

std::string HilbertData::str() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

const std::vector<Monomial>& GradedAlgebra::std_monomials(int d) const {
  static const std::vector<Monomial> empty;
  if (d < 0 || d >= static_cast<int>(std_basis_.size())) return empty;
  return std_basis_[static_cast<std::size_t>(d)];
}

std::optional<std::size_t> GradedAlgebra::monomial_index(
    int d, const Monomial& m) const {
  if (d < 0 || d >= static_cast<int>(index_.size())) return std::nullopt;
  const auto& map = index_[static_cast<std::size_t>(d)];
  auto it = map.find(pack_exps(m.exps()));
  if (it == map.end()) return std::nullopt;
  return it->second;
}

void GradedAlgebra::accumulate_normal_form(int d, const Monomial& m,
                                           const Scalar& c,
                                           std::vector<Scalar>& acc) const {
  const DegreeLayer& layer = layers_.at(static_cast<std::size_t>(d));
  auto idx = monomial_index(d, m);
  if (!idx) throw InternalError("monomial missing from its degree layer");
  auto sit = std::lower_bound(layer.std_cols.begin(), layer.std_cols.end(),
                              *idx);
  if (sit != layer.std_cols.end() && *sit == *idx) {
    acc[static_cast<std::size_t>(sit - layer.std_cols.begin())] += c;
    return;
  }
  auto pit = std::lower_bound(layer.pivot_cols.begin(),
                              layer.pivot_cols.end(), *idx);
  if (pit == layer.pivot_cols.end() || *pit != *idx)
    throw InternalError("monomial is neither standard nor a pivot");
  std::size_t r = static_cast<std::size_t>(pit - layer.pivot_cols.begin());
  // pivot monomial reduces to minus the standard tail of its echelon row
  for (std::size_t j = 0; j < layer.std_cols.size(); ++j) {
    const Scalar& v = layer.pivot_rows_std.at(r, j);
    if (!v.is_zero()) acc[j].submul(c, v);
  }
}

std::vector<Scalar> GradedAlgebra::normal_form(const Poly& f) const {
  if (f.vars() != spec_.vars || f.field() != spec_.field)
    throw InputError("polynomial does not live in this algebra's ambient ring");
  if (f.is_zero()) return {};
  if (!f.is_homogeneous())
    throw InputError("normal form requires a homogeneous polynomial");
  int d = f.degree();
  if (d > top_) return {};
  std::vector<Scalar> acc(static_cast<std::size_t>(hf(d)),
                          Scalar::zero(spec_.field));
  for (const auto& [m, c] : f.terms()) accumulate_normal_form(d, m, c, acc);
  return acc;
}

Poly GradedAlgebra::normal_form_poly(const Poly& f) const {
  std::vector<Scalar> coords = normal_form(f);
  Poly out(spec_.vars, spec_.field);
  if (f.is_zero() || f.degree() > top_) return out;
  const auto& basis = std_monomials(f.degree());
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (!coords[j].is_zero()) out.add_term(basis[j], coords[j]);
  return out;
}

bool GradedAlgebra::is_zero_in_quotient(const Poly& f) const {
  std::vector<Scalar> coords = normal_form(f);
  return std::all_of(coords.begin(), coords.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

std::map<int, long> GradedAlgebra::min_gen_degrees() const {
  std::map<int, long> out;
  for (std::size_t d = 1; d < layers_.size(); ++d)
    if (layers_[d].new_generator_count > 0)
      out[static_cast<int>(d)] = layers_[d].new_generator_count;
  return out;
}

GradedAlgebra build_algebra(const AlgebraSpec& spec) {
  const std::size_t n = spec.vars.size();
  if (spec.max_degree_bound < 2 || spec.max_degree_bound > 1024)
    throw InputError("degree bound must lie in [2, 1024]");
  for (const Poly& g : spec.gens) {
    if (g.vars() != spec.vars || g.field() != spec.field)
      throw InputError("generator does not live in the ambient ring");
    if (g.is_zero()) throw InputError("zero generator");
    if (!g.is_homogeneous())
      throw InputError("generator is not homogeneous: " + g.str());
    if (g.degree() == 0) throw InputError("constant generator: " + g.str());
    if (g.degree() == 1)
      throw InputError("degree-1 generator '" + g.str() +
                       "': eliminate linear forms with reduce_linear first");
  }

  GradedAlgebra a;
  a.spec_ = spec;

  // degree 0
  {
    DegreeLayer l0;
    l0.monomials = {Monomial::one(n)};
    l0.pivot_rows_std = Mat(spec.field, 0, 1);
    a.layers_.push_back(l0);
    a.index_.push_back({{pack_exps(l0.monomials[0].exps()), 0}});
    a.std_basis_.push_back(l0.monomials);
    a.hf_.values.push_back(1);
  }

  std::vector<Monomial> prev_mons = {Monomial::one(n)};
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> prev_rows;

  for (int d = 1; d <= spec.max_degree_bound; ++d) {
    std::vector<Monomial> mons = monomials_of_degree(n, d);
    std::unordered_map<std::string, std::size_t> index;
    index.reserve(mons.size() * 2);
    for (std::size_t j = 0; j < mons.size(); ++j)
      index.emplace(pack_exps(mons[j].exps()), j);

    ReducedEchelon ech(spec.field, mons.size());
    std::vector<Scalar> dense;
    for (const auto& row : prev_rows)
      for (std::size_t i = 0; i < n; ++i) {
        dense.assign(mons.size(), Scalar::zero(spec.field));
        for (const auto& [c, v] : row) {
          Monomial prod = prev_mons[c] * Monomial::variable(n, i);
          dense[index.at(pack_exps(prod.exps()))] = v;
        }
        ech.absorb(std::move(dense));
      }
    std::size_t span_rank = ech.rank();
    for (const Poly& g : spec.gens) {
      if (g.degree() != d) continue;
      dense.assign(mons.size(), Scalar::zero(spec.field));
      for (const auto& [m, c] : g.terms())
        dense[index.at(pack_exps(m.exps()))] = c;
      ech.absorb(std::move(dense));
    }

    DegreeLayer layer;
    layer.monomials = mons;
    layer.pivot_cols = ech.pivot_cols();
    layer.new_generator_count =
        static_cast<long>(ech.rank()) - static_cast<long>(span_rank);
    std::vector<bool> is_pivot(mons.size(), false);
    for (std::size_t pc : layer.pivot_cols) is_pivot[pc] = true;
    for (std::size_t j = 0; j < mons.size(); ++j)
      if (!is_pivot[j]) layer.std_cols.push_back(j);

    layer.pivot_rows_std =
        Mat(spec.field, layer.pivot_cols.size(), layer.std_cols.size());
    prev_rows.clear();
    for (std::size_t r = 0; r < layer.pivot_cols.size(); ++r) {
      const auto& row = ech.row_for_pivot(layer.pivot_cols[r]);
      for (std::size_t j = 0; j < layer.std_cols.size(); ++j)
        layer.pivot_rows_std.at(r, j) = row[layer.std_cols[j]];
      prev_rows.push_back(sparse_row(row));
    }

    long hfd = static_cast<long>(mons.size()) -
               static_cast<long>(layer.pivot_cols.size());
    std::vector<Monomial> std_mons;
    std_mons.reserve(layer.std_cols.size());
    for (std::size_t sc : layer.std_cols) std_mons.push_back(mons[sc]);

    a.layers_.push_back(std::move(layer));
    a.index_.push_back(std::move(index));
    a.std_basis_.push_back(std::move(std_mons));

    if (hfd == 0) {
      a.top_ = d - 1;
      return a;
    }
    a.hf_.values.push_back(hfd);
    prev_mons = std::move(mons);
  }
  throw BoundError("quotient is still nonzero at degree " +
                   std::to_string(spec.max_degree_bound) +
                   "; raise the degree bound or check the generators");
}

GradedMap multiplication_map(const GradedAlgebra& a, const Poly& theta) {
  if (theta.vars() != a.vars() || theta.field() != a.field())
    throw InputError("element does not live in this algebra's ambient ring");
  if (theta.is_zero() || !theta.is_homogeneous() || theta.degree() < 1)
    throw InputError(
        "multiplication maps need a homogeneous element of positive degree");
  if (a.is_zero_in_quotient(theta))
    throw InputError("element '" + theta.str() + "' is zero in the quotient");

  GradedMap gm;
  gm.element = theta;
  gm.degree = theta.degree();
  int top = a.top_degree();
  for (int src = 0; src <= top; ++src) {
    int dst = src + gm.degree;
    std::size_t rows = static_cast<std::size_t>(a.hf(dst));
    std::size_t cols = static_cast<std::size_t>(a.hf(src));
    Mat m(a.field(), rows, cols);
    if (rows > 0) {
      const auto& basis = a.std_monomials(src);
      for (std::size_t j = 0; j < cols; ++j) {
        Poly shifted(a.vars(), a.field());
        for (const auto& [mt, ct] : theta.terms())
          shifted.add_term(mt * basis[j], ct);
        std::vector<Scalar> coords = a.normal_form(shifted);
        for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = coords[i];
      }
    }
    gm.mats.push_back(std::move(m));
  }
  return gm;
}

SocleReport socle(const GradedAlgebra& a) {
  SocleReport rep;
  int top = a.top_degree();
  std::vector<GradedMap> var_maps;
  for (std::size_t i = 0; i < a.vars().size(); ++i)
    var_maps.push_back(
        multiplication_map(a, Poly::variable(a.vars(), a.field(), i)));

  for (int d = 0; d <= top; ++d) {
    Eliminator el(a.field(), static_cast<std::size_t>(a.hf(d)));
    for (const auto& vm : var_maps) {
      const Mat& m = vm.at(d);
      for (std::size_t r = 0; r < m.rows(); ++r) el.absorb(m.row(r));
    }
    rep.dims.push_back(a.hf(d) - static_cast<long>(el.rank()));
  }
  for (long v : rep.dims) rep.type += v;
  rep.level_degree = top;
  rep.level = true;
  for (int d = 0; d < top; ++d)
    if (rep.dims[static_cast<std::size_t>(d)] != 0) rep.level = false;
  rep.gorenstein = rep.type == 1;
  return rep;
}

AlgebraSpec reduce_linear(const AlgebraSpec& spec,
                          const std::vector<Poly>& forms) {
  const std::size_t n = spec.vars.size();
  std::vector<Poly> gens = spec.gens;
  std::vector<Poly> rem = forms;
  std::vector<bool> pivot(n, false);

  for (std::size_t k = 0; k < rem.size(); ++k) {
    const Poly& f = rem[k];
    if (f.vars() != spec.vars || f.field() != spec.field)
      throw InputError("linear form does not live in the ambient ring");
    if (f.is_zero())
      throw InputError("dependent linear forms: form " + std::to_string(k + 1) +
                       " reduces to zero");
    if (f.degree() != 1 || !f.is_homogeneous())
      throw InputError("not a linear form: " + f.str());

    // the largest-index variable appearing in the form becomes the pivot
    std::size_t p = n;
    Scalar c = Scalar::zero(spec.field);
    for (const auto& [m, cc] : f.terms())
      for (std::size_t i = 0; i < n; ++i)
        if (m.exp(i) == 1 && (p == n || i > p)) {
          p = i;
          c = cc;
        }

    Poly repl(spec.vars, spec.field);
    Scalar inv = c.inv();
    for (const auto& [m, cc] : f.terms())
      if (m.exp(p) == 0) repl.add_term(m, -(cc * inv));

    for (Poly& g : gens) g = g.substitute(p, repl);
    for (std::size_t j = k + 1; j < rem.size(); ++j)
      rem[j] = rem[j].substitute(p, repl);
    pivot[p] = true;
  }

  std::vector<std::string> kept;
  std::vector<std::size_t> var_map(n, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) {
      var_map[i] = kept.size();
      kept.push_back(spec.vars.name(i));
    }

  AlgebraSpec out;
  out.vars = VarSet(kept);
  out.field = spec.field;
  out.max_degree_bound = spec.max_degree_bound;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    out.gens.push_back(g.renamed(out.vars, var_map));
  }
  return out;
}

ReductionResult random_artinian_reduction(const AlgebraSpec& spec, int count,
                                          std::uint64_t seed, int retries) {
  const std::size_t n = spec.vars.size();
  if (count < 0) throw InputError("negative number of linear forms");
  if (static_cast<std::size_t>(count) > n)
    throw InputError("cannot cut by more independent forms than variables");
  if (retries < 1) throw InputError("retry limit must be positive");
  // validate the generators up front so that an InputError inside the retry
  // loop can only mean a dependent draw of linear forms
  for (const Poly& g : spec.gens) {
    if (g.vars() != spec.vars || g.field() != spec.field)
      throw InputError("generator does not live in the ambient ring");
    if (g.is_zero() || !g.is_homogeneous() || g.degree() < 2)
      throw InputError("generators must be homogeneous of degree >= 2");
  }

  long mod =
      spec.field.kind == FieldKind::PrimeField ? spec.field.modulus : 32003;
  std::mt19937_64 eng(seed);

  for (int attempt = 1; attempt <= retries; ++attempt) {
    std::vector<Poly> forms;
    for (int k = 0; k < count; ++k) {
      Poly f(spec.vars, spec.field);
      while (f.is_zero()) {
        for (std::size_t i = 0; i < n; ++i) {
          long c = static_cast<long>(eng() % static_cast<std::uint64_t>(mod));
          f.add_term(Monomial::variable(n, i), Scalar::from_long(c, spec.field));
        }
      }
      forms.push_back(std::move(f));
    }
    try {
      AlgebraSpec red = reduce_linear(spec, forms);
      GradedAlgebra alg = build_algebra(red);
      ReductionResult res;
      res.reduced = std::move(red);
      res.forms = std::move(forms);
      res.seed = seed;
      res.attempts = attempt;
      res.algebra = std::move(alg);
      return res;
    } catch (const InputError&) {
      continue;  // dependent draw; resample
    } catch (const BoundError&) {
      continue;  // quotient not Artinian within the bound for this draw
    }
  }
  throw BoundError("random linear reduction failed " +
                   std::to_string(retries) + " times from seed " +
                   std::to_string(seed) + "; raise the retry limit or check " +
                   "that the expected codimension is right");
}

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void file_error(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

AlgebraFile read_algebra_file(const std::string& text) {
  std::optional<FieldSpec> field;
  std::optional<VarSet> vars;
  int maxdeg = 60;
  std::vector<std::pair<std::size_t, std::string>> gen_lines, reduce_lines;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    std::string rest;
    std::getline(ls, rest);
    rest = trim(rest);

    if (kw == "field") {
      if (field) file_error(lineno, "field specified twice");
      if (rest == "Q") {
        field = FieldSpec::rationals();
      } else {
        std::istringstream fs(rest);
        std::string f;
        long p = 0;
        fs >> f >> p;
        if (f != "F" || p == 0)
          file_error(lineno, "expected 'field Q' or 'field F <p>'");
        try {
          field = FieldSpec::prime(p);
        } catch (const InputError& e) {
          file_error(lineno, e.what());
        }
      }
    } else if (kw == "vars") {
      if (vars) file_error(lineno, "vars specified twice");
      std::vector<std::string> names;
      std::istringstream vs(rest);
      std::string v;
      while (vs >> v) names.push_back(v);
      if (names.empty()) file_error(lineno, "empty variable list");
      try {
        vars = VarSet(names);
      } catch (const InputError& e) {
        file_error(lineno, e.what());
      }
    } else if (kw == "maxdeg") {
      try {
        maxdeg = std::stoi(rest);
      } catch (const std::exception&) {
        file_error(lineno, "expected an integer degree bound");
      }
    } else if (kw == "gen") {
      gen_lines.emplace_back(lineno, rest);
    } else if (kw == "reduce") {
      reduce_lines.emplace_back(lineno, rest);
    } else {
      file_error(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (!field) throw InputError("missing 'field' line");
  if (!vars) throw InputError("missing 'vars' line");

  AlgebraFile out;
  out.spec.vars = *vars;
  out.spec.field = *field;
  out.spec.max_degree_bound = maxdeg;
  for (const auto& [ln, src] : gen_lines) {
    try {
      out.spec.gens.push_back(parse_polynomial(src, *vars, *field));
    } catch (const ParseError& e) {
      file_error(ln, e.what());
    }
  }
  for (const auto& [ln, src] : reduce_lines) {
    try {
      out.reduce_forms.push_back(parse_polynomial(src, *vars, *field));
    } catch (const ParseError& e) {
      file_error(ln, e.what());
    }
  }
  return out;
}

}  // namespace ezd
