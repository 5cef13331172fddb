#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zfsolve/la/dense_matrix.hpp"
#include "zfsolve/la/vector.hpp"

namespace zfsolve::la {

/// Factorize-once / solve-many form of a square, possibly singular matrix B:
///
///   P_r * B * P_c = L * U
///
/// with L unit lower triangular, U upper trapezoidal whose first rank() rows
/// carry nonzero diagonal pivots and whose remaining rows vanish. P_r and P_c
/// are permutations recorded as index maps. L and U share one k x k array, so
/// storage is k^2 residues plus two permutations.
///
/// Pivot search: first nonzero of the remaining block, scanning rows
/// top-down, then columns left-to-right within a row.
class CoreFactorization {
 public:
  CoreFactorization() = default;

  const FieldSpec& spec() const { return spec_; }
  std::size_t order() const { return order_; }
  std::size_t rank() const { return rank_; }

  /// row_perm()[i] is the row of B placed at position i.
  const std::vector<Index>& row_perm() const { return row_perm_; }
  /// col_perm()[j] is the column of B placed at position j.
  const std::vector<Index>& col_perm() const { return col_perm_; }
  /// Original column indices of the pivots, in elimination order.
  std::vector<Index> pivot_columns() const;

  /// Field elements held by the factors (the packed L\U array).
  std::size_t storage_elements() const { return lu_.size(); }

  /// L and U multiplied out with the permutations undone. Equals the
  /// factorized matrix exactly.
  DenseMatrix reconstruct() const;

  /// One y with B y = c when the system is consistent, free (non-pivot)
  /// variables set to zero; std::nullopt otherwise. O(k^2).
  /// Throws std::invalid_argument if c has the wrong length or field.
  std::optional<Vector> solve(const Vector& c) const;

  friend CoreFactorization factorize(const DenseMatrix& b);

 private:
  Residue lu(Index i, Index j) const { return lu_[i * order_ + j]; }

  FieldSpec spec_;
  std::size_t order_ = 0;
  std::size_t rank_ = 0;
  std::vector<Index> row_perm_;
  std::vector<Index> col_perm_;
  std::vector<Residue> lu_;
};

/// Throws std::invalid_argument on a non-square matrix. Singular input is fine.
CoreFactorization factorize(const DenseMatrix& b);

inline std::optional<Vector> fact_solve(const CoreFactorization& f, const Vector& c) {
  return f.solve(c);
}

}  // namespace zfsolve::la
