#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "zfsolve/ff.hpp"
#include "zfsolve/la/sparse_matrix.hpp"

namespace zfsolve::zf {

/// Directed graph on vertices 0..n-1 with sorted out- and in-adjacency.
/// Never contains self-loops.
class PatternGraph {
 public:
  PatternGraph() = default;
  /// Throws std::invalid_argument on out-of-range endpoints. Self-loops and
  /// repeated edges are dropped.
  PatternGraph(std::size_t n, std::vector<std::pair<Index, Index>> edges);

  /// Off-diagonal nonzero pattern of a square matrix: edge (u, v) iff
  /// A(u, v) != 0 and u != v. Throws std::invalid_argument if A is not square.
  static PatternGraph from_matrix(const la::SparseMatrix& a);

  std::size_t size() const { return n_; }
  std::size_t edge_count() const { return out_idx_.size(); }

  std::span<const Index> out_neighbors(Index u) const {
    return std::span<const Index>(out_idx_).subspan(out_ptr_[u], out_ptr_[u + 1] - out_ptr_[u]);
  }
  std::span<const Index> in_neighbors(Index v) const {
    return std::span<const Index>(in_idx_).subspan(in_ptr_[v], in_ptr_[v + 1] - in_ptr_[v]);
  }
  bool has_edge(Index u, Index v) const;

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> out_ptr_{0};
  std::vector<Index> out_idx_;
  std::vector<std::size_t> in_ptr_{0};
  std::vector<Index> in_idx_;
};

inline PatternGraph pattern_graph(const la::SparseMatrix& a) { return PatternGraph::from_matrix(a); }

}  // namespace zfsolve::zf
