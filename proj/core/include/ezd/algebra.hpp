#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ezd/matrix.hpp"
#include "ezd/poly.hpp"

namespace ezd {

// Description of a standard graded quotient: polynomial variables, the base
// field, homogeneous generators of the defining ideal, and a degree bound up
// to which the quotient must become zero.
struct AlgebraSpec {
  VarSet vars;
  FieldSpec field;
  std::vector<Poly> gens;
  int max_degree_bound = 60;
};

struct HilbertData {
  std::vector<long> values;  // dimension in degree d at index d, up to the top degree

  int top_degree() const { return static_cast<int>(values.size()) - 1; }
  long at(int d) const {
    return (d < 0 || d > top_degree()) ? 0 : values[d];
  }
  long total() const;
  std::string str() const;  // "1,5,11,..."
};

// One graded piece of the quotient: the monomial basis of the ambient degree,
// the reduced echelon data of the ideal in that degree, and the induced
// standard monomial basis.
struct DegreeLayer {
  std::vector<Monomial> monomials;        // ambient basis, grevlex-descending
  std::vector<std::size_t> pivot_cols;    // ascending; ideal leading monomials
  std::vector<std::size_t> std_cols;      // ascending; standard monomials
  // row r of the ideal echelon restricted to the standard columns; the full
  // row is e_{pivot_cols[r]} plus this tail, so the normal form of the r-th
  // pivot monomial is minus this tail.
  Mat pivot_rows_std;
  long new_generator_count = 0;  // minimal generators of the ideal born here
};

// Multiplication by a fixed homogeneous element, one matrix per source
// degree; mats[a] maps the degree-a standard basis to the degree-(a+deg)
// standard basis (empty target above the top degree).
struct GradedMap {
  Poly element;
  int degree = 0;
  std::vector<Mat> mats;  // index a = 0..top

  const Mat& at(int a) const { return mats.at(static_cast<std::size_t>(a)); }
};

struct SocleReport {
  std::vector<long> dims;  // socle dimension per degree, 0..top
  long type = 0;           // total socle dimension
  int level_degree = -1;   // top degree
  bool level = false;      // socle concentrated in the top degree
  bool gorenstein = false; // socle is one-dimensional
};

// A standard graded Artinian quotient with exact degree-by-degree linear
// algebra: Hilbert function, normal forms onto standard monomials, minimal
// generator counts, and multiplication maps.
class GradedAlgebra {
 public:
  const AlgebraSpec& spec() const { return spec_; }
  const VarSet& vars() const { return spec_.vars; }
  const FieldSpec& field() const { return spec_.field; }
  int top_degree() const { return top_; }
  const HilbertData& hilbert() const { return hf_; }
  long hf(int d) const { return hf_.at(d); }

  // Standard monomials of degree d (grevlex-descending), empty above top+1.
  const std::vector<Monomial>& std_monomials(int d) const;
  // Coordinates of the normal form of a homogeneous polynomial with respect
  // to the standard monomials of its degree; an empty vector above the top
  // degree.  Zero input yields an empty vector.
  std::vector<Scalar> normal_form(const Poly& f) const;
  Poly normal_form_poly(const Poly& f) const;
  bool is_zero_in_quotient(const Poly& f) const;

  // Minimal generator count of the defining ideal per degree, up to top+1.
  std::map<int, long> min_gen_degrees() const;

  friend GradedAlgebra build_algebra(const AlgebraSpec& spec);

 private:
  AlgebraSpec spec_;
  int top_ = -1;
  HilbertData hf_;
  std::vector<DegreeLayer> layers_;  // 0..top+1
  std::vector<std::unordered_map<std::string, std::size_t>> index_;
  std::vector<std::vector<Monomial>> std_basis_;

  std::optional<std::size_t> monomial_index(int d, const Monomial& m) const;
  void accumulate_normal_form(int d, const Monomial& m, const Scalar& c,
                              std::vector<Scalar>& acc) const;
};

// Builds the graded quotient, degree by degree, until the Hilbert function
// reaches zero.  Throws InputError for generators of degree < 2 (linear
// generators must be eliminated first, constants never) and BoundError when
// the quotient is still nonzero at the degree bound.
GradedAlgebra build_algebra(const AlgebraSpec& spec);

// Multiplication by theta as a family of exact matrices between standard
// bases.  Throws InputError if theta is not homogeneous of positive degree,
// or is zero in the quotient.
GradedMap multiplication_map(const GradedAlgebra& a, const Poly& theta);

// Socle dimensions: kernels of the joint multiplication by all variables.
SocleReport socle(const GradedAlgebra& a);

// Substitute away independent linear forms and drop the pivot variables,
// producing the quotient presentation in the surviving variables.  Throws
// InputError if a form is not linear or the forms are dependent.
AlgebraSpec reduce_linear(const AlgebraSpec& spec,
                          const std::vector<Poly>& forms);

struct ReductionResult {
  AlgebraSpec reduced;
  std::vector<Poly> forms;
  std::uint64_t seed = 0;
  int attempts = 0;
  GradedAlgebra algebra;
};

// Draws `count` random linear forms from a seeded generator, reduces, and
// builds the quotient; retries with fresh draws when the forms are dependent
// or the quotient is not Artinian within the bound.  Throws BoundError after
// `retries` failed attempts.
ReductionResult random_artinian_reduction(const AlgebraSpec& spec, int count,
                                          std::uint64_t seed, int retries = 5);

// Text form of an algebra description:
//
//   # comment
//   field Q            (or: field F 32003)
//   vars x y z
//   maxdeg 40
//   gen x^2-y*z
//   reduce x-y
//
// Errors carry 1-based line numbers.
struct AlgebraFile {
  AlgebraSpec spec;
  std::vector<Poly> reduce_forms;
};

AlgebraFile read_algebra_file(const std::string& text);

}  // namespace ezd
