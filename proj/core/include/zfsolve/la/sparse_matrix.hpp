#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zfsolve/la/vector.hpp"

namespace zfsolve::la {

class DenseMatrix;

struct Triplet {
  Index row;
  Index col;
  Residue value;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Compressed sparse row matrix. Only nonzero values are stored and column
/// indices are strictly increasing within each row, so nnz() is the number of
/// nonzero entries of the matrix.
class SparseMatrix {
 public:
  struct RowView {
    std::span<const Index> cols;
    std::span<const Residue> values;
    std::size_t size() const { return cols.size(); }
  };

  SparseMatrix() = default;
  /// All-zero matrix.
  SparseMatrix(FieldSpec spec, std::size_t rows, std::size_t cols);

  /// Entries with value zero are dropped. Throws std::invalid_argument on an
  /// out-of-range index, a non-canonical value, or a repeated (row, col).
  static SparseMatrix from_triplets(FieldSpec spec, std::size_t rows, std::size_t cols,
                                    std::vector<Triplet> entries);

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return col_idx_.size(); }
  bool is_square() const { return rows_ == cols_; }

  RowView row(Index i) const {
    const auto b = row_ptr_[i], e = row_ptr_[i + 1];
    return {std::span<const Index>(col_idx_).subspan(b, e - b),
            std::span<const Residue>(values_).subspan(b, e - b)};
  }
  /// A(i, j), zero if not stored. O(log row length).
  Residue at(Index i, Index j) const;

  /// Row-major list of stored entries.
  std::vector<Triplet> triplets() const;

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  FieldSpec spec_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::size_t> row_ptr_{0};
  std::vector<Index> col_idx_;
  std::vector<Residue> values_;
};

/// A * x. Cost proportional to nnz(A).
Vector spmv(const SparseMatrix& a, const Vector& x);
/// A_{i,*} x without bounds or field checks on x; the caller guarantees a
/// matching length.
Residue row_dot(const SparseMatrix& a, Index i, std::span<const Residue> x);

SparseMatrix row_submatrix(const SparseMatrix& a, std::span<const Index> rows);
/// Column j as a dense vector.
Vector column(const SparseMatrix& a, Index j);
DenseMatrix dense_from(const SparseMatrix& a);
SparseMatrix transpose(const SparseMatrix& a);

}  // namespace zfsolve::la
