#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "zfsolve/la/dense_matrix.hpp"
#include "zfsolve/la/vector.hpp"

// Plain reduced-row-echelon routines. They share no code with
// CoreFactorization and serve as the reference the fast paths are tested
// against.
namespace zfsolve::la {

/// Some x with A x = b for A of any shape, or std::nullopt. Free variables
/// are zero.
std::optional<Vector> dense_gaussian_solve(const DenseMatrix& a, const Vector& b);

/// dense_gaussian_solve for many right-hand sides with a single reduction of
/// the augmented matrix [A | b_1 ... b_s].
std::vector<std::optional<Vector>> dense_gaussian_solve_many(const DenseMatrix& a,
                                                             const std::vector<Vector>& bs);

std::size_t rank(const DenseMatrix& a);

/// Basis of { x : A x = 0 }, one vector per free column of the RREF.
std::vector<Vector> nullspace_basis(const DenseMatrix& a);

}  // namespace zfsolve::la
