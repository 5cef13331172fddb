#include <stdexcept>

#include "zfsolve/la/gaussian.hpp"

namespace zfsolve::la {

namespace {

// Reduced row echelon form of a rows x cols row-major array, eliminating
// only over the first `pivot_cols` columns. Returns the pivot column of each
// pivot row in order.
std::vector<std::size_t> rref(const FieldSpec& f, std::vector<Residue>& m, std::size_t rows,
                              std::size_t cols, std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[p * cols + j], m[r * cols + j]);
    }
    const Residue inv = f.inv(m[r * cols + c]);
    for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = f.mul(m[r * cols + j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Residue factor = m[i * cols + c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        m[i * cols + j] = f.sub(m[i * cols + j], f.mul(factor, m[r * cols + j]));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::optional<Vector>> dense_gaussian_solve_many(const DenseMatrix& a,
                                                             const std::vector<Vector>& bs) {
  const auto& f = a.spec();
  const std::size_t rows = a.rows(), n = a.cols(), s = bs.size();
  const std::size_t cols = n + s;
  for (const auto& b : bs) {
    if (!(b.spec() == f)) throw ff::FieldMismatch();
    if (b.size() != rows) throw std::invalid_argument("gaussian solve: rhs length mismatch");
  }

  std::vector<Residue> m(rows * cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * cols + j] = a.at(i, j);
    for (std::size_t t = 0; t < s; ++t) m[i * cols + n + t] = bs[t][i];
  }
  const auto pivots = rref(f, m, rows, cols, n);
  const std::size_t r = pivots.size();

  std::vector<std::optional<Vector>> out;
  out.reserve(s);
  for (std::size_t t = 0; t < s; ++t) {
    bool consistent = true;
    for (std::size_t i = r; i < rows && consistent; ++i) consistent = m[i * cols + n + t] == 0;
    if (!consistent) {
      out.emplace_back(std::nullopt);
      continue;
    }
    std::vector<Residue> x(n, 0);
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = m[i * cols + n + t];
    out.emplace_back(Vector(f, std::move(x)));
  }
  return out;
}

std::optional<Vector> dense_gaussian_solve(const DenseMatrix& a, const Vector& b) {
  return std::move(dense_gaussian_solve_many(a, {b}).front());
}

std::size_t rank(const DenseMatrix& a) {
  if (a.spec().is_gf2()) return rank(a.to_bits());
  std::vector<Residue> m(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i * a.cols() + j] = a.at(i, j);
  }
  return rref(a.spec(), m, a.rows(), a.cols(), a.cols()).size();
}

std::vector<Vector> nullspace_basis(const DenseMatrix& a) {
  const auto& f = a.spec();
  const std::size_t rows = a.rows(), n = a.cols();
  std::vector<Residue> m(rows * n);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = a.at(i, j);
  }
  const auto pivots = rref(f, m, rows, n, n);

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Residue> x(n, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(m[i * n + free]);
    basis.emplace_back(f, std::move(x));
  }
  return basis;
}

}  // namespace zfsolve::la
