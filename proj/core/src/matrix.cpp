#include "ezd/matrix.hpp"

#include <algorithm>

namespace ezd {

Mat::Mat(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols),
      a_(rows * cols, Scalar::zero(field)) {}

Mat Mat::identity(const FieldSpec& field, std::size_t n) {
  Mat m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
  return m;
}

std::vector<Scalar> Mat::row(std::size_t i) const {
  return std::vector<Scalar>(a_.begin() + i * cols_,
                             a_.begin() + (i + 1) * cols_);
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (field_ != o.field_) throw InputError("field mismatch in matrix product");
  if (cols_ != o.rows_)
    throw InputError("shape mismatch in matrix product");
  Mat p(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& v = at(i, k);
      if (v.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& w = o.at(k, j);
        if (!w.is_zero()) p.at(i, j) += v * w;
      }
    }
  return p;
}

void Mat::add_scaled(const Mat& o, const Scalar& c) {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw InputError("shape or field mismatch in matrix sum");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!o.a_[i].is_zero()) a_[i].submul(-c, o.a_[i]);
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Mat::operator==(const Mat& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ &&
         a_ == o.a_;
}

ReducedEchelon::ReducedEchelon(FieldSpec field, std::size_t cols)
    : field_(field), cols_(cols) {}

bool ReducedEchelon::absorb(std::vector<Scalar> row) {
  if (row.size() != cols_)
    throw InputError("row length mismatch in elimination");
  std::size_t lead = 0;
  while (lead < cols_) {
    while (lead < cols_ && row[lead].is_zero()) ++lead;
    if (lead == cols_) return false;
    auto it = pivot_to_row_.find(lead);
    if (it == pivot_to_row_.end()) break;
    const std::vector<Scalar>& p = rows_[it->second];
    Scalar f = row[lead];
    for (std::size_t j = lead; j < cols_; ++j)
      if (!p[j].is_zero()) row[j].submul(f, p[j]);
  }
  for (const auto& [pc, ri] : pivot_to_row_) {
    if (pc <= lead || row[pc].is_zero()) continue;
    const std::vector<Scalar>& p = rows_[ri];
    Scalar f = row[pc];
    for (std::size_t j = pc; j < cols_; ++j)
      if (!p[j].is_zero()) row[j].submul(f, p[j]);
  }
  Scalar inv = row[lead].inv();
  for (std::size_t j = lead; j < cols_; ++j)
    if (!row[j].is_zero()) row[j] *= inv;
  for (auto& [pc, ri] : pivot_to_row_) {
    (void)pc;
    std::vector<Scalar>& r = rows_[ri];
    if (r[lead].is_zero()) continue;
    Scalar f = r[lead];
    for (std::size_t j = lead; j < cols_; ++j)
      if (!row[j].is_zero()) r[j].submul(f, row[j]);
  }
  pivot_to_row_[lead] = rows_.size();
  rows_.push_back(std::move(row));
  return true;
}

std::vector<std::size_t> ReducedEchelon::pivot_cols() const {
  std::vector<std::size_t> out;
  out.reserve(pivot_to_row_.size());
  for (const auto& [pc, ri] : pivot_to_row_) {
    (void)ri;
    out.push_back(pc);
  }
  return out;
}

const std::vector<Scalar>& ReducedEchelon::row_for_pivot(
    std::size_t pivot_col) const {
  return rows_.at(pivot_to_row_.at(pivot_col));
}

Eliminator::Eliminator(FieldSpec field, std::size_t cols)
    : field_(field), cols_(cols) {}

bool Eliminator::absorb(std::vector<Scalar> row) {
  if (row.size() != cols_)
    throw InputError("row length mismatch in elimination");
  std::size_t lead = 0;
  while (true) {
    while (lead < cols_ && row[lead].is_zero()) ++lead;
    if (lead == cols_) return false;
    auto it = by_lead_.find(lead);
    if (it == by_lead_.end()) break;
    Scalar f = row[lead];
    for (const auto& [j, v] : it->second.nz) row[j].submul(f, v);
  }
  Scalar inv = row[lead].inv();
  SparseRow sr;
  for (std::size_t j = lead; j < cols_; ++j)
    if (!row[j].is_zero()) sr.nz.emplace_back(j, row[j] * inv);
  by_lead_.emplace(lead, std::move(sr));
  return true;
}

RrefResult rref(const Mat& m) {
  ReducedEchelon ech(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) ech.absorb(m.row(i));
  RrefResult out;
  out.pivot_cols = ech.pivot_cols();
  out.rank = out.pivot_cols.size();
  out.reduced = Mat(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < out.rank; ++r) {
    const auto& row = ech.row_for_pivot(out.pivot_cols[r]);
    for (std::size_t j = 0; j < m.cols(); ++j) out.reduced.at(r, j) = row[j];
  }
  return out;
}

std::size_t rank_of(const Mat& m) {
  Eliminator e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.absorb(m.row(i));
  return e.rank();
}

Mat kernel_basis(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t pc : r.pivot_cols) is_pivot[pc] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);

  Mat k(m.field(), m.cols(), free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t fc = free_cols[fi];
    k.at(fc, fi) = Scalar::one(m.field());
    for (std::size_t pr = 0; pr < r.rank; ++pr)
      k.at(r.pivot_cols[pr], fi) = -r.reduced.at(pr, fc);
  }
  return k;
}

}  // namespace ezd
