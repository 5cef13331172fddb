#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "zfsolve/la/bit_matrix.hpp"
#include "zfsolve/la/vector.hpp"

namespace zfsolve::la {

/// Row-major dense matrix over a finite field.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  /// Zero matrix.
  DenseMatrix(FieldSpec spec, std::size_t rows, std::size_t cols)
      : spec_(spec), rows_(rows), cols_(cols), values_(rows * cols, 0) {}

  static DenseMatrix identity(FieldSpec spec, std::size_t n);
  /// Throws std::invalid_argument on ragged rows or non-canonical values.
  static DenseMatrix from_rows(FieldSpec spec,
                               std::initializer_list<std::initializer_list<Residue>> rows);
  static DenseMatrix from_rows(FieldSpec spec, const std::vector<std::vector<Residue>>& rows);
  static DenseMatrix from_bits(const BitMatrix& bits);

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Residue at(Index i, Index j) const { return values_[i * cols_ + j]; }
  /// Throws std::invalid_argument on a non-canonical value.
  void set(Index i, Index j, Residue value);

  std::span<const Residue> row(Index i) const {
    return std::span<const Residue>(values_).subspan(i * cols_, cols_);
  }

  Vector column(Index j) const;
  DenseMatrix transposed() const;
  /// Rows and columns picked by index lists, in list order.
  DenseMatrix submatrix(std::span<const Index> rows, std::span<const Index> cols) const;

  /// Requires a GF(2) matrix.
  BitMatrix to_bits() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  friend DenseMatrix dense_mul(const DenseMatrix&, const DenseMatrix&);

  FieldSpec spec_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Residue> values_;
};

/// Classical product; GF(2) operands go through packed 64-lane rows.
/// Throws std::invalid_argument on mismatched inner dimensions.
DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y);
Vector matvec(const DenseMatrix& x, const Vector& v);

/// X^e by repeated squaring; X^0 is the identity. Throws on non-square X.
DenseMatrix matpow(const DenseMatrix& x, std::uint64_t e);

}  // namespace zfsolve::la
