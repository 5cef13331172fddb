#include <stdexcept>
#include <string>

#include "zfsolve/la/dense_matrix.hpp"
#include "zfsolve/la/power.hpp"

namespace zfsolve::la {

BitMatrix multiply(const BitMatrix& lhs, const BitMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw std::invalid_argument("bit matrix inner dimensions differ");
  BitMatrix out(lhs.rows(), rhs.cols());
  const std::size_t stride = out.stride();
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    auto dst = out.row(i);
    const auto src = lhs.row(i);
    for (std::size_t w = 0; w < src.size(); ++w) {
      BitMatrix::Word bits = src[w];
      while (bits != 0) {
        const std::size_t k = w * BitMatrix::kLanes + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const auto add = rhs.row(k);
        for (std::size_t x = 0; x < stride; ++x) dst[x] ^= add[x];
      }
    }
  }
  return out;
}

std::size_t rank(BitMatrix m) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && !m.get(p, c)) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m.get(i, c)) m.xor_row(i, r);
    }
    ++r;
  }
  return r;
}

DenseMatrix DenseMatrix::identity(FieldSpec spec, std::size_t n) {
  DenseMatrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m.values_[i * n + i] = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(FieldSpec spec, const std::vector<std::vector<Residue>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(spec, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

DenseMatrix DenseMatrix::from_rows(FieldSpec spec,
                                   std::initializer_list<std::initializer_list<Residue>> rows) {
  std::vector<std::vector<Residue>> v;
  for (const auto& r : rows) v.emplace_back(r);
  return from_rows(spec, v);
}

DenseMatrix DenseMatrix::from_bits(const BitMatrix& bits) {
  DenseMatrix m(FieldSpec::gf2(), bits.rows(), bits.cols());
  for (std::size_t i = 0; i < bits.rows(); ++i) {
    for (std::size_t j = 0; j < bits.cols(); ++j) m.values_[i * m.cols_ + j] = bits.get(i, j);
  }
  return m;
}

void DenseMatrix::set(Index i, Index j, Residue value) {
  if (!spec_.contains(value)) {
    throw std::invalid_argument("value " + std::to_string(value) +
                                " is not a canonical residue of " + spec_.to_string());
  }
  if (i >= rows_ || j >= cols_) throw std::out_of_range("dense matrix index out of range");
  values_[i * cols_ + j] = value;
}

Vector DenseMatrix::column(Index j) const {
  if (j >= cols_) throw std::out_of_range("column index out of range");
  std::vector<Residue> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return Vector(spec_, std::move(v));
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(spec_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.values_[j * rows_ + i] = at(i, j);
  }
  return t;
}

DenseMatrix DenseMatrix::submatrix(std::span<const Index> rows, std::span<const Index> cols) const {
  DenseMatrix s(spec_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (rows[i] >= rows_ || cols[j] >= cols_) throw std::out_of_range("submatrix index");
      s.values_[i * cols.size() + j] = at(rows[i], cols[j]);
    }
  }
  return s;
}

BitMatrix DenseMatrix::to_bits() const {
  if (!spec_.is_gf2()) throw std::invalid_argument("to_bits requires a GF(2) matrix");
  BitMatrix b(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (at(i, j)) b.set(i, j, true);
    }
  }
  return b;
}

DenseMatrix dense_mul(const DenseMatrix& x, const DenseMatrix& y) {
  if (!(x.spec() == y.spec())) throw ff::FieldMismatch();
  if (x.cols() != y.rows()) {
    throw std::invalid_argument("dense_mul: " + std::to_string(x.rows()) + "x" +
                                std::to_string(x.cols()) + " times " + std::to_string(y.rows()) +
                                "x" + std::to_string(y.cols()));
  }
  if (x.spec().is_gf2()) return DenseMatrix::from_bits(multiply(x.to_bits(), y.to_bits()));

  const auto& f = x.spec();
  DenseMatrix out(f, x.rows(), y.cols());
  // i-k-j order keeps the inner loop on contiguous rows of y and out.
  for (std::size_t i = 0; i < x.rows(); ++i) {
    Residue* dst = out.values_.data() + i * out.cols_;
    for (std::size_t k = 0; k < x.cols(); ++k) {
      const Residue a = x.at(i, k);
      if (a == 0) continue;
      const auto src = y.row(k);
      for (std::size_t j = 0; j < y.cols(); ++j) dst[j] = f.add(dst[j], f.mul(a, src[j]));
    }
  }
  return out;
}

Vector matvec(const DenseMatrix& x, const Vector& v) {
  if (!(x.spec() == v.spec())) throw ff::FieldMismatch();
  if (x.cols() != v.size()) throw std::invalid_argument("matvec dimension mismatch");
  const auto& f = x.spec();
  std::vector<Residue> out(x.rows(), 0);
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto r = x.row(i);
    Residue acc = 0;
    for (std::size_t j = 0; j < r.size(); ++j) acc = f.add(acc, f.mul(r[j], v[j]));
    out[i] = acc;
  }
  return Vector(f, std::move(out));
}

DenseMatrix matpow(const DenseMatrix& x, std::uint64_t e) {
  if (!x.is_square()) throw std::invalid_argument("matpow requires a square matrix");
  if (x.spec().is_gf2()) {
    // Stay packed for the whole chain.
    return DenseMatrix::from_bits(power_by_squaring(
        x.to_bits(), e, BitMatrix::identity(x.rows()),
        [](const BitMatrix& a, const BitMatrix& b) { return multiply(a, b); }));
  }
  return power_by_squaring(x, e, DenseMatrix::identity(x.spec(), x.rows()),
                           [](const DenseMatrix& a, const DenseMatrix& b) { return dense_mul(a, b); });
}

}  // namespace zfsolve::la
