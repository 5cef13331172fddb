#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zfsolve/la/dense_matrix.hpp"
#include "zfsolve/la/factorization.hpp"
#include "zfsolve/la/sparse_matrix.hpp"
#include "zfsolve/la/vector.hpp"
#include "zfsolve/zf/forcing_plan.hpp"

namespace zfsolve::core {

/// Forward substitution along the forcing order. Starting from x = 0, each
/// forced vertex u with parent p gets
///
///   x_u = (b_p - A_{p,*} x) / A_{p,u}
///
/// so that row p of A x matches b_p afterwards. Reads each parent row once:
/// O(nnz(A)) field operations. The result vanishes on Z.
///
/// Throws std::invalid_argument if the plan does not fit A (size, or a
/// zero A_{p,u}) or b has the wrong length/field.
la::Vector forcing(const la::SparseMatrix& a, const zf::ForcingPlan& plan, const la::Vector& b);

/// k x k core matrix. Row i belongs to terminal row_labels[i] (ascending
/// vertex order), column j to Z vertex col_labels[j] (Z input order).
struct CoreMatrix {
  la::DenseMatrix b;
  std::vector<Index> row_labels;
  std::vector<Index> col_labels;

  std::size_t order() const { return col_labels.size(); }
  friend bool operator==(const CoreMatrix&, const CoreMatrix&) = default;
};

/// Column j is (a_v - A L(a_v)) restricted to the terminals, v = Z[j]: one
/// forcing pass and one sparse product per column, O(nnz(A) k) overall.
CoreMatrix find_core(const la::SparseMatrix& a, const zf::ForcingPlan& plan);

/// Preprocessed solver for A x = b: the matrix, its forcing plan, the core
/// matrix and a factorization of it. Immutable; concurrent solves are safe.
class SolverHandle {
 public:
  /// Validates that `core` carries the plan's label orders and factorizes it.
  /// Throws std::invalid_argument on a mismatch.
  SolverHandle(la::SparseMatrix a, zf::ForcingPlan plan, CoreMatrix core);

  const la::SparseMatrix& matrix() const { return a_; }
  const zf::ForcingPlan& plan() const { return plan_; }
  const CoreMatrix& core() const { return core_; }
  const la::CoreFactorization& factorization() const { return fact_; }
  std::size_t size() const { return a_.rows(); }
  std::size_t k() const { return core_.order(); }

  /// Field elements held beyond A: the core matrix and its factors.
  std::size_t auxiliary_elements() const {
    return core_.b.rows() * core_.b.cols() + fact_.storage_elements();
  }

  /// L(b) = forcing(A, plan, b).
  la::Vector apply_L(const la::Vector& b) const;
  /// R(b) = b - A L(b).
  la::Vector apply_R(const la::Vector& b) const;
  /// R(b) restricted to the terminals, in core row order. O(nnz(A)).
  la::Vector r_on_terminals(const la::Vector& b) const;

  /// One x with A x = b, or std::nullopt when the system has no solution.
  /// The returned x is always checked against A x = b before it is handed
  /// out. O(k^2 + nnz(A)).
  std::optional<la::Vector> solve(const la::Vector& b) const;

 private:
  void check_rhs(const la::Vector& b) const;

  la::SparseMatrix a_;
  zf::ForcingPlan plan_;
  CoreMatrix core_;
  la::CoreFactorization fact_;
};

/// Builds the plan for Z, the core matrix and its factorization.
/// Throws zf::NotZeroForcingSet when Z does not force the pattern of A.
SolverHandle preprocess(const la::SparseMatrix& a, std::span<const Index> z);

inline std::optional<la::Vector> solve(const SolverHandle& h, const la::Vector& b) {
  return h.solve(b);
}

}  // namespace zfsolve::core
