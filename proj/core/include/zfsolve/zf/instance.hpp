#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "zfsolve/ff.hpp"
#include "zfsolve/la/sparse_matrix.hpp"

namespace zfsolve::zf {

struct Instance {
  la::SparseMatrix a;
  std::vector<Index> zfs;
};

/// Random square matrix over `spec` that has a zero forcing set of size k.
///
/// The vertices are shuffled and cut into k node-disjoint chains; chain
/// heads form Z. Every other off-diagonal pair is proposed as an extra edge
/// with probability `density` and kept only if Z still forces the whole
/// graph. Off-diagonal values are uniform nonzero residues, diagonal values
/// uniform (zero allowed). Deterministic in seed.
///
/// Throws std::invalid_argument unless 1 <= k <= n and 0 <= density <= 1.
Instance random_instance(std::size_t n, std::size_t k, double density, ff::FieldSpec spec,
                         std::uint64_t seed);

}  // namespace zfsolve::zf
