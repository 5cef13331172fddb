#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "zfsolve/zf/pattern_graph.hpp"

namespace zfsolve::zf {

class NotZeroForcingSet : public std::runtime_error {
 public:
  NotZeroForcingSet() : std::runtime_error("not a zero forcing set") {}
};

struct Force {
  Index target;  // the vertex turned blue
  Index parent;  // the blue vertex that forced it

  friend bool operator==(const Force&, const Force&) = default;
};

/// Result of running the color-change rule to a fixed point.
struct Closure {
  std::vector<bool> blue;     // blue[v] after the process stops
  std::vector<Force> forces;  // chronological

  bool complete() const;
  /// Blue vertices, ascending.
  std::vector<Index> colored() const;
};

/// Runs the color-change rule from `start` until no force applies. The
/// chronological rule picks, among all pairs (parent v, target u) where blue
/// v has u as its only non-blue out-neighbor, the smallest u and then the
/// smallest v. O((n + m) log n).
///
/// Throws std::invalid_argument on out-of-range or repeated start vertices.
Closure closure(const PatternGraph& g, std::span<const Index> start);

bool is_zfs(const PatternGraph& g, std::span<const Index> z);

/// Chronological forcing certificate of a zero forcing set.
class ForcingPlan {
 public:
  static constexpr Index kNone = std::numeric_limits<Index>::max();

  ForcingPlan() = default;

  std::size_t size() const { return parent_.size(); }
  /// Z in caller order.
  const std::vector<Index>& zfs() const { return zfs_; }
  /// V \ Z in forcing order.
  const std::vector<Index>& order() const { return order_; }
  /// Forcing parent per vertex, kNone for members of Z.
  const std::vector<Index>& parents() const { return parent_; }
  Index parent(Index u) const { return parent_.at(u); }
  /// Vertices without a forcing child, ascending.
  const std::vector<Index>& terminals() const { return terminals_; }
  bool in_zfs(Index v) const { return parent_.at(v) == kNone; }

  /// Forcing chains, one per element of Z and in Z order, each starting at
  /// its Z vertex and ending at a terminal.
  std::vector<std::vector<Index>> chains() const;

  friend bool operator==(const ForcingPlan&, const ForcingPlan&) = default;
  friend ForcingPlan forcing_plan(const PatternGraph& g, std::span<const Index> z);

 private:
  std::vector<Index> zfs_;
  std::vector<Index> order_;
  std::vector<Index> parent_;
  std::vector<Index> child_;
  std::vector<Index> terminals_;
};

/// Throws NotZeroForcingSet if the closure of z does not cover the graph.
ForcingPlan forcing_plan(const PatternGraph& g, std::span<const Index> z);

/// Heuristic: add the smallest uncolored vertex until the closure is
/// complete, then drop members (newest first) whose removal keeps Z forcing.
/// No optimality claim. Result is ascending.
std::vector<Index> greedy_find_zfs(const PatternGraph& g);

}  // namespace zfsolve::zf
