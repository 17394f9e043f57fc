#include "ezd/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "ezd/binomial.hpp"

namespace ezd {

namespace {

bool valid_ident(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_ident(names_[i]))
      throw InputError("invalid variable name '" + names_[i] + "'");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j])
        throw InputError("duplicate variable name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> VarSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  for (int v : e_)
    if (v < 0) throw InputError("negative exponent in monomial");
}

Monomial Monomial::one(std::size_t nvars) {
  return Monomial(std::vector<int>(nvars, 0));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  int d = 0;
  for (int v : e_) d += v;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (e_.size() != o.e_.size())
    throw InputError("variable count mismatch in monomial product");
  std::vector<int> e(e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) e[i] = e_[i] + o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divisible_by(const Monomial& o) const {
  if (e_.size() != o.e_.size())
    throw InputError("variable count mismatch in divisibility test");
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] < o.e_[i]) return false;
  return true;
}

std::string Monomial::str(const VarSet& vars) const {
  std::string out;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (e_[i] > 1) out += '^' + std::to_string(e_[i]);
  }
  return out.empty() ? "1" : out;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& ea = a.exps();
  const auto& eb = b.exps();
  for (std::size_t i = ea.size(); i-- > 0;) {
    int d = ea[i] - eb[i];
    if (d != 0) return d < 0;
  }
  return false;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d) {
  if (d < 0) throw InputError("monomial enumeration needs degree >= 0");
  if (nvars == 0) {
    // the constants-only ring: 1 in degree zero, nothing above
    if (d == 0) return {Monomial::one(0)};
    return {};
  }
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
    if (i + 1 == nvars) {
      e[i] = rem;
      out.emplace_back(e);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      e[i] = v;
      self(self, i + 1, rem - v);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

long long monomial_count(std::size_t nvars, int d) {
  return binom_ll(d + static_cast<long long>(nvars) - 1,
                  static_cast<long long>(nvars) - 1);
}

Poly::Poly(VarSet vars, FieldSpec field)
    : vars_(std::move(vars)), field_(field) {}

Poly Poly::variable(const VarSet& vars, const FieldSpec& field,
                    std::size_t i) {
  Poly p(vars, field);
  p.add_term(Monomial::variable(vars.size(), i), Scalar::one(field));
  return p;
}

Poly Poly::constant(const VarSet& vars, const Scalar& c) {
  Poly p(vars, c.field());
  p.add_term(Monomial::one(vars.size()), c);
  return p;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

int Poly::degree() const {
  return terms_.empty() ? -1 : terms_.front().first.degree();
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (m.nvars() != vars_.size())
    throw InputError("monomial does not match the variable set");
  if (c.field() != field_) throw InputError("coefficient field mismatch");
  if (c.is_zero()) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const auto& t, const Monomial& key) {
        return grevlex_greater(t.first, key);
      });
  if (it != terms_.end() && it->first == m) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (vars_ != o.vars_) throw InputError("variable set mismatch");
  if (field_ != o.field_) throw InputError("field mismatch");
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  check_compatible(o);
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(vars_, field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_back(m, -c);
  return out;
}

Poly Poly::scaled(const Scalar& c) const {
  Poly out(vars_, field_);
  if (c.is_zero()) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace_back(m, v * c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  std::map<Monomial, Scalar, GrevlexGreater> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m = ma * mb;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), ca * cb);
      else
        it->second += ca * cb;
    }
  Poly out(vars_, field_);
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.terms_.emplace_back(m, c);
  return out;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw InputError("negative power of a polynomial");
  Poly out = Poly::constant(vars_, Scalar::one(field_));
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool Poly::operator==(const Poly& o) const {
  return vars_ == o.vars_ && field_ == o.field_ && terms_ == o.terms_;
}

Poly Poly::substitute(std::size_t var, const Poly& replacement) const {
  check_compatible(replacement);
  std::vector<Poly> powers{Poly::constant(vars_, Scalar::one(field_))};
  Poly out(vars_, field_);
  for (const auto& [m, c] : terms_) {
    int k = m.exp(var);
    while (static_cast<int>(powers.size()) <= k)
      powers.push_back(powers.back() * replacement);
    std::vector<int> rest = m.exps();
    rest[var] = 0;
    Poly base(vars_, field_);
    base.add_term(Monomial(std::move(rest)), c);
    out = out + base * powers[k];
  }
  return out;
}

Poly Poly::renamed(const VarSet& new_vars,
                   const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != vars_.size())
    throw InputError("rename map does not match the variable set");
  Poly out(new_vars, field_);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e(new_vars.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m.exp(i) == 0) continue;
      if (var_map[i] == static_cast<std::size_t>(-1))
        throw InputError("variable '" + vars_.name(i) +
                         "' has no image under the rename");
      e[var_map[i]] += m.exp(i);
    }
    out.add_term(Monomial(std::move(e)), c);
  }
  return out;
}

std::vector<Scalar> Poly::coefficient_vector(
    const std::vector<Monomial>& basis) const {
  std::vector<Scalar> out(basis.size(), Scalar::zero(field_));
  for (const auto& [m, c] : terms_) {
    auto it = std::find(basis.begin(), basis.end(), m);
    if (it == basis.end())
      throw InputError("term " + m.str(vars_) + " not in the given basis");
    out[it - basis.begin()] = c;
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    std::string abs = neg ? cs.substr(1) : cs;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? "-" : "+";
    std::string ms = m.str(vars_);
    if (ms == "1")
      out += abs;
    else if (abs == "1")
      out += ms;
    else
      out += abs + "*" + ms;
  }
  return out;
}

}  // namespace ezd
