#include <algorithm>
#include <stdexcept>
#include <string>

#include "zfsolve/la/dense_matrix.hpp"
#include "zfsolve/la/sparse_matrix.hpp"

namespace zfsolve::la {

SparseMatrix::SparseMatrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), row_ptr_(rows + 1, 0) {}

SparseMatrix SparseMatrix::from_triplets(FieldSpec spec, std::size_t rows, std::size_t cols,
                                         std::vector<Triplet> entries) {
  for (const auto& t : entries) {
    if (t.row >= rows || t.col >= cols) {
      throw std::invalid_argument("entry (" + std::to_string(t.row + 1) + ", " +
                                  std::to_string(t.col + 1) + ") outside a " +
                                  std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
    }
    if (!spec.contains(t.value)) {
      throw std::invalid_argument("value " + std::to_string(t.value) +
                                  " is not a canonical residue of " + spec.to_string());
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i].row == entries[i - 1].row && entries[i].col == entries[i - 1].col) {
      throw std::invalid_argument("duplicate entry (" + std::to_string(entries[i].row + 1) +
                                  ", " + std::to_string(entries[i].col + 1) + ")");
    }
  }

  SparseMatrix m(spec, rows, cols);
  for (const auto& t : entries) {
    if (t.value == 0) continue;
    m.col_idx_.push_back(t.col);
    m.values_.push_back(t.value);
    ++m.row_ptr_[t.row + 1];
  }
  for (std::size_t i = 0; i < rows; ++i) m.row_ptr_[i + 1] += m.row_ptr_[i];
  return m;
}

Residue SparseMatrix::at(Index i, Index j) const {
  const auto r = row(i);
  const auto it = std::lower_bound(r.cols.begin(), r.cols.end(), j);
  if (it == r.cols.end() || *it != j) return 0;
  return r.values[static_cast<std::size_t>(it - r.cols.begin())];
}

std::vector<Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (Index i = 0; i < rows_; ++i) {
    const auto r = row(i);
    for (std::size_t p = 0; p < r.size(); ++p) out.push_back({i, r.cols[p], r.values[p]});
  }
  return out;
}

Residue row_dot(const SparseMatrix& a, Index i, std::span<const Residue> x) {
  const auto& f = a.spec();
  const auto r = a.row(i);
  Residue acc = 0;
  if (f.is_gf2()) {
    for (Index c : r.cols) acc ^= x[c];
    return acc;
  }
  for (std::size_t p = 0; p < r.size(); ++p) acc = f.add(acc, f.mul(r.values[p], x[r.cols[p]]));
  return acc;
}

Vector spmv(const SparseMatrix& a, const Vector& x) {
  if (!(a.spec() == x.spec())) throw ff::FieldMismatch();
  if (x.size() != a.cols()) {
    throw std::invalid_argument("spmv: vector of length " + std::to_string(x.size()) +
                                " against " + std::to_string(a.cols()) + " columns");
  }
  std::vector<Residue> y(a.rows());
  for (Index i = 0; i < a.rows(); ++i) y[i] = row_dot(a, i, x.values());
  return Vector(a.spec(), std::move(y));
}

SparseMatrix row_submatrix(const SparseMatrix& a, std::span<const Index> rows) {
  std::vector<Triplet> entries;
  for (std::size_t out = 0; out < rows.size(); ++out) {
    if (rows[out] >= a.rows()) throw std::out_of_range("row index out of range");
    const auto r = a.row(rows[out]);
    for (std::size_t p = 0; p < r.size(); ++p) entries.push_back({out, r.cols[p], r.values[p]});
  }
  return SparseMatrix::from_triplets(a.spec(), rows.size(), a.cols(), std::move(entries));
}

Vector column(const SparseMatrix& a, Index j) {
  if (j >= a.cols()) throw std::out_of_range("column index out of range");
  Vector v(a.spec(), a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    const Residue value = a.at(i, j);
    if (value != 0) v.set(i, value);
  }
  return v;
}

DenseMatrix dense_from(const SparseMatrix& a) {
  DenseMatrix d(a.spec(), a.rows(), a.cols());
  for (const auto& t : a.triplets()) d.set(t.row, t.col, t.value);
  return d;
}

SparseMatrix transpose(const SparseMatrix& a) {
  auto entries = a.triplets();
  for (auto& t : entries) std::swap(t.row, t.col);
  return SparseMatrix::from_triplets(a.spec(), a.cols(), a.rows(), std::move(entries));
}

}  // namespace zfsolve::la
