#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ezd/field.hpp"

namespace ezd {

// Dense row-major matrix over an exact field.
class Mat {
 public:
  Mat() = default;
  Mat(FieldSpec field, std::size_t rows, std::size_t cols);  // zero-filled
  static Mat identity(const FieldSpec& field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::vector<Scalar> row(std::size_t i) const;
  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  // this += c * o, shapes and fields must agree
  void add_scaled(const Mat& o, const Scalar& c);
  bool is_zero() const;
  bool operator==(const Mat& o) const;

 private:
  FieldSpec field_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Mat reduced;                          // canonical reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // ascending
  std::size_t rank = 0;
};

RrefResult rref(const Mat& m);
std::size_t rank_of(const Mat& m);

// Basis of the right kernel, one column per free column of rref(m), ordered
// by ascending free column index; the free coordinate itself is set to 1.
Mat kernel_basis(const Mat& m);

// Incremental rank accumulator over sparse rows.  Absorbed rows are kept in
// row echelon form (pivots normalized to 1, no back-elimination), so the rank
// of a large matrix can be computed streaming one row at a time without ever
// materializing the whole matrix.
class Eliminator {
 public:
  Eliminator(FieldSpec field, std::size_t cols);

  // Reduces the dense row against the rows absorbed so far and stores what is
  // left.  Returns true if the row increased the rank.  The row is consumed.
  bool absorb(std::vector<Scalar> row);
  std::size_t rank() const { return by_lead_.size(); }
  std::size_t cols() const { return cols_; }

 private:
  struct SparseRow {
    std::vector<std::pair<std::size_t, Scalar>> nz;  // ascending, nz[0] is the pivot (value 1)
  };
  FieldSpec field_;
  std::size_t cols_;
  std::map<std::size_t, SparseRow> by_lead_;
};

// Incremental reduced-row-echelon accumulator with dense rows.  Unlike
// Eliminator it back-eliminates on every insertion, so at any point the
// stored rows are the canonical reduced basis of the row space seen so far.
class ReducedEchelon {
 public:
  ReducedEchelon(FieldSpec field, std::size_t cols);

  bool absorb(std::vector<Scalar> row);
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  // Pivot columns in ascending order with rows_ ordered to match.
  std::vector<std::size_t> pivot_cols() const;
  const std::vector<Scalar>& row_for_pivot(std::size_t pivot_col) const;

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::vector<std::vector<Scalar>> rows_;
  std::map<std::size_t, std::size_t> pivot_to_row_;
};

}  // namespace ezd
