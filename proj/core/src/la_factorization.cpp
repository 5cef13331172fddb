#include <numeric>
#include <stdexcept>
#include <utility>

#include "zfsolve/la/factorization.hpp"

namespace zfsolve::la {

CoreFactorization factorize(const DenseMatrix& b) {
  if (!b.is_square()) throw std::invalid_argument("factorize requires a square matrix");
  const auto& f = b.spec();
  const std::size_t k = b.rows();

  CoreFactorization out;
  out.spec_ = f;
  out.order_ = k;
  out.row_perm_.resize(k);
  out.col_perm_.resize(k);
  std::iota(out.row_perm_.begin(), out.row_perm_.end(), Index{0});
  std::iota(out.col_perm_.begin(), out.col_perm_.end(), Index{0});
  out.lu_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto r = b.row(i);
    std::copy(r.begin(), r.end(), out.lu_.begin() + static_cast<std::ptrdiff_t>(i * k));
  }

  auto& a = out.lu_;
  auto at = [&](std::size_t i, std::size_t j) -> Residue& { return a[i * k + j]; };

  std::size_t s = 0;
  for (; s < k; ++s) {
    std::size_t pr = k, pc = k;
    for (std::size_t i = s; i < k && pr == k; ++i) {
      for (std::size_t j = s; j < k; ++j) {
        if (at(i, j) != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == k) break;

    if (pr != s) {
      for (std::size_t j = 0; j < k; ++j) std::swap(at(pr, j), at(s, j));
      std::swap(out.row_perm_[pr], out.row_perm_[s]);
    }
    if (pc != s) {
      for (std::size_t i = 0; i < k; ++i) std::swap(at(i, pc), at(i, s));
      std::swap(out.col_perm_[pc], out.col_perm_[s]);
    }

    const Residue pivot_inv = f.inv(at(s, s));
    for (std::size_t i = s + 1; i < k; ++i) {
      if (at(i, s) == 0) continue;
      const Residue m = f.mul(at(i, s), pivot_inv);
      at(i, s) = m;
      for (std::size_t j = s + 1; j < k; ++j) {
        if (at(s, j) != 0) at(i, j) = f.sub(at(i, j), f.mul(m, at(s, j)));
      }
    }
  }
  out.rank_ = s;
  return out;
}

std::vector<Index> CoreFactorization::pivot_columns() const {
  return {col_perm_.begin(), col_perm_.begin() + static_cast<std::ptrdiff_t>(rank_)};
}

DenseMatrix CoreFactorization::reconstruct() const {
  const auto& f = spec_;
  const std::size_t k = order_;
  DenseMatrix out(f, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      // (L U)_{ij} = sum_{t <= min(i, j), t < rank} L_{it} U_{tj}, L_{ii} = 1.
      Residue acc = 0;
      const std::size_t top = std::min({i, j + 1, rank_});
      for (std::size_t t = 0; t < top; ++t) acc = f.add(acc, f.mul(lu(i, t), lu(t, j)));
      if (i < rank_ && i <= j) acc = f.add(acc, lu(i, j));
      out.set(row_perm_[i], col_perm_[j], acc);
    }
  }
  return out;
}

std::optional<Vector> CoreFactorization::solve(const Vector& c) const {
  if (!(c.spec() == spec_)) throw ff::FieldMismatch();
  if (c.size() != order_) throw std::invalid_argument("fact_solve: right-hand side length mismatch");
  const auto& f = spec_;
  const std::size_t k = order_;

  std::vector<Residue> z(k);
  for (std::size_t i = 0; i < k; ++i) z[i] = c[row_perm_[i]];

  // L z' = P_r c; L has nonzero sub-diagonal entries only in the first rank_ columns.
  for (std::size_t i = 1; i < k; ++i) {
    Residue acc = z[i];
    const std::size_t top = std::min(i, rank_);
    for (std::size_t t = 0; t < top; ++t) {
      const Residue l = lu(i, t);
      if (l != 0) acc = f.sub(acc, f.mul(l, z[t]));
    }
    z[i] = acc;
  }
  for (std::size_t i = rank_; i < k; ++i) {
    if (z[i] != 0) return std::nullopt;
  }

  // U w = z' with w_j = 0 for j >= rank.
  std::vector<Residue> w(k, 0);
  for (std::size_t ii = rank_; ii-- > 0;) {
    Residue acc = z[ii];
    for (std::size_t j = ii + 1; j < rank_; ++j) {
      const Residue u = lu(ii, j);
      if (u != 0) acc = f.sub(acc, f.mul(u, w[j]));
    }
    w[ii] = f.div(acc, lu(ii, ii));
  }

  std::vector<Residue> y(k, 0);
  for (std::size_t j = 0; j < k; ++j) y[col_perm_[j]] = w[j];
  return Vector(f, std::move(y));
}

}  // namespace zfsolve::la
