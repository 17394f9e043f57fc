#pragma once

#include <doctest.h>

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ezd/algebra.hpp"
#include "ezd/matrix.hpp"
#include "ezd/parse.hpp"

namespace tst {

inline ezd::VarSet vars(std::vector<std::string> names) {
  return ezd::VarSet(std::move(names));
}

inline ezd::Poly pp(const std::string& text, const ezd::VarSet& v,
                    const ezd::FieldSpec& f) {
  return ezd::parse_polynomial(text, v, f);
}

inline ezd::Mat random_mat(std::mt19937_64& rng, const ezd::FieldSpec& f,
                           std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> d(-4, 4);
  ezd::Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = ezd::Scalar::from_long(d(rng), f);
  return m;
}

// Monomial-ideal Hilbert function by divisibility counting, no linear
// algebra involved; every generator must be a single term.
inline std::vector<long> monomial_quotient_hf(const ezd::AlgebraSpec& spec) {
  std::vector<ezd::Monomial> gens;
  for (const ezd::Poly& g : spec.gens) {
    REQUIRE(g.terms().size() == 1);
    gens.push_back(g.terms().front().first);
  }
  std::vector<long> out;
  for (int d = 0;; ++d) {
    long n = 0;
    for (const ezd::Monomial& m :
         ezd::monomials_of_degree(spec.vars.size(), d)) {
      bool inside = false;
      for (const ezd::Monomial& g : gens)
        if (m.divisible_by(g)) {
          inside = true;
          break;
        }
      if (!inside) ++n;
    }
    if (n == 0) break;
    out.push_back(n);
  }
  return out;
}

}  // namespace tst
