#include "ezd/fixtures.hpp"

#include <string>
#include <vector>

#include "ezd/error.hpp"
#include "ezd/parse.hpp"

namespace ezd {

namespace {

AlgebraSpec spec_from_strings(const std::vector<std::string>& names,
                              const std::vector<std::string>& gens,
                              const FieldSpec& field) {
  AlgebraSpec spec;
  spec.vars = VarSet(names);
  spec.field = field;
  spec.gens.reserve(gens.size());
  for (const std::string& g : gens)
    spec.gens.push_back(parse_polynomial(g, spec.vars, field));
  return spec;
}

// Ascending k-subsets of {0, .., n-1}.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n,
                                                      std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

AlgebraSpec example_may4(const FieldSpec& field) {
  return spec_from_strings(
      {"x", "y", "z", "w", "t"},
      {"x^4", "y^4", "z^4", "w^4", "x^2*y^2", "z^2*w^2", "y^2*w^2", "x*t",
       "z*t", "w*t", "t^2"},
      field);
}

AlgebraSpec example_x4(const FieldSpec& field) {
  return spec_from_strings({"x"}, {"x^4"}, field);
}

AlgebraSpec example_x3y2(const FieldSpec& field) {
  return spec_from_strings({"x", "y"}, {"x^3", "y^2"}, field);
}

AlgebraSpec example_e3gor(const FieldSpec& field) {
  return spec_from_strings({"x", "y", "z"}, {"x^2", "y^2", "z^2"}, field);
}

AlgebraSpec example_rem75(const FieldSpec& field) {
  return spec_from_strings(
      {"x", "y", "z"},
      {"x^2*y", "x^2*z", "y^3", "z^3", "x^4 + y^2*z^2"}, field);
}

Poly poly_determinant(const std::vector<std::vector<Poly>>& entries) {
  const std::size_t n = entries.size();
  if (n == 0) throw InputError("determinant needs a nonempty matrix");
  for (const auto& row : entries)
    if (row.size() != n)
      throw InputError("determinant needs a square matrix");
  const Poly& corner = entries[0][0];
  if (n == 1) return corner;

  Poly det(corner.vars(), corner.field());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      row.reserve(n - 1);
      for (std::size_t jj = 0; jj < n; ++jj)
        if (jj != j) row.push_back(entries[i][jj]);
      minor.push_back(std::move(row));
    }
    Poly cofactor = entries[0][j] * poly_determinant(minor);
    det = (j % 2 == 0) ? det + cofactor : det - cofactor;
  }
  return det;
}

AlgebraSpec generic_minors(std::size_t rows, std::size_t cols, int size,
                           const FieldSpec& field) {
  if (size < 2 || static_cast<std::size_t>(size) > rows || rows > cols ||
      cols > 9)
    throw InputError("minor size must satisfy 2 <= size <= rows <= cols <= 9");

  std::vector<std::string> names;
  names.reserve(rows * cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j)
      names.push_back("m" + std::to_string(i) + std::to_string(j));

  AlgebraSpec spec;
  spec.vars = VarSet(names);
  spec.field = field;

  const std::size_t k = static_cast<std::size_t>(size);
  for (const auto& rset : subsets_of_size(rows, k)) {
    for (const auto& cset : subsets_of_size(cols, k)) {
      std::vector<std::vector<Poly>> sub(k);
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
          sub[a].push_back(Poly::variable(spec.vars, field,
                                          rset[a] * cols + cset[b]));
      spec.gens.push_back(poly_determinant(sub));
    }
  }
  return spec;
}

AlgebraSpec example_segre_cube(const FieldSpec& field) {
  std::vector<std::string> names;
  for (int b = 0; b < 8; ++b) {
    std::string nm = "w";
    nm += static_cast<char>('0' + ((b >> 2) & 1));
    nm += static_cast<char>('0' + ((b >> 1) & 1));
    nm += static_cast<char>('0' + (b & 1));
    names.push_back(nm);
  }
  return spec_from_strings(
      names,
      {
          // one 2 x 2 flattening minor per fixed coordinate value
          "w000*w011 - w001*w010",
          "w100*w111 - w101*w110",
          "w000*w101 - w001*w100",
          "w010*w111 - w011*w110",
          "w000*w110 - w010*w100",
          "w001*w111 - w011*w101",
          // the three independent diagonal minors
          "w000*w111 - w001*w110",
          "w000*w111 - w010*w101",
          "w000*w111 - w011*w100",
      },
      field);
}

}  // namespace ezd
