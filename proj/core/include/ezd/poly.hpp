#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ezd/field.hpp"

namespace ezd {

// Ordered list of variable names; the position in the list is the variable's
// identity everywhere else.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;
  bool operator==(const VarSet&) const = default;

 private:
  std::vector<std::string> names_;
};

// Exponent vector over a fixed number of variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exps);
  static Monomial one(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return e_.size(); }
  int degree() const;
  int exp(std::size_t i) const { return e_.at(i); }
  const std::vector<int>& exps() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;
  bool operator==(const Monomial&) const = default;
  std::string str(const VarSet& vars) const;

 private:
  std::vector<int> e_;
};

// Graded reverse lexicographic comparison: higher total degree wins; for
// equal degrees a > b exactly when the last nonzero entry of the exponent
// difference a - b is negative.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_greater(a, b);
  }
};

// All monomials of total degree d in nvars variables, grevlex-descending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int d);
long long monomial_count(std::size_t nvars, int d);

// Polynomial with terms kept grevlex-descending and coefficients nonzero.
class Poly {
 public:
  Poly() = default;
  Poly(VarSet vars, FieldSpec field);  // zero polynomial
  static Poly variable(const VarSet& vars, const FieldSpec& field,
                       std::size_t i);
  static Poly constant(const VarSet& vars, const Scalar& c);

  const VarSet& vars() const { return vars_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::pair<Monomial, Scalar>>& terms() const {
    return terms_;
  }

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  int degree() const;  // -1 for the zero polynomial
  void add_term(const Monomial& m, const Scalar& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly pow(int k) const;
  bool operator==(const Poly& o) const;

  // Replace variable var by the given polynomial (same variable set).
  Poly substitute(std::size_t var, const Poly& replacement) const;
  // Move the polynomial onto a different variable set; old variable i maps to
  // new index var_map[i], and entries equal to npos assert the variable is
  // absent.
  Poly renamed(const VarSet& new_vars, const std::vector<std::size_t>& var_map)
      const;

  // Coefficients over an explicit monomial basis (ordering taken from the
  // basis); all terms must appear in the basis.
  std::vector<Scalar> coefficient_vector(
      const std::vector<Monomial>& basis) const;

  std::string str() const;

 private:
  void check_compatible(const Poly& o) const;

  VarSet vars_{};
  FieldSpec field_{};
  std::vector<std::pair<Monomial, Scalar>> terms_;
};

}  // namespace ezd
