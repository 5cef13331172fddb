#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "zfsolve/core/solver.hpp"
#include "zfsolve/la/dense_matrix.hpp"
#include "zfsolve/la/sparse_matrix.hpp"
#include "zfsolve/la/vector.hpp"

namespace zfsolve::grid {

/// rows x cols grid; cell (r, c) is vertex r * cols + c (row-major, zero-based).
struct GridSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t cells() const { return rows * cols; }
  Index index(std::size_t r, std::size_t c) const { return r * cols + c; }
  GridSpec transposed() const { return {cols, rows}; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Lights as a GF(2) vector in row-major order, 1 = on.
class BoardState {
 public:
  /// All lights off. Throws std::invalid_argument on an empty grid.
  explicit BoardState(GridSpec spec);
  /// Throws std::invalid_argument unless cells is a GF(2) vector of length rows*cols.
  BoardState(GridSpec spec, la::Vector cells);

  static BoardState all_on(GridSpec spec);

  const GridSpec& spec() const { return spec_; }
  const la::Vector& cells() const { return cells_; }
  bool on(std::size_t r, std::size_t c) const { return cells_[spec_.index(r, c)] != 0; }
  void set(std::size_t r, std::size_t c, bool on);
  std::size_t lit_count() const;
  bool all_off() const { return cells_.is_zero(); }

  BoardState transposed() const;

  friend bool operator==(const BoardState&, const BoardState&) = default;

 private:
  GridSpec spec_;
  la::Vector cells_;
};

/// Closed-neighborhood matrix of the grid over GF(2): ones on the diagonal
/// and between 4-neighbors.
la::SparseMatrix grid_matrix(GridSpec g);

/// 2n x 2n one-row light-chasing step [[N', I], [I, 0]] over GF(2) where
/// N'_{ij} = 1 iff |i - j| <= 1. Maps the states of two consecutive rows
/// (upper, lower) to the states of (lower, next) after the presses on the
/// lower row that clear the upper one.
la::DenseMatrix n_matrix(std::size_t n);

/// Core matrix of the grid with Z = first row, built from powers of
/// N(cols): M = N(cols)^(rows-1) applied to the first two rows of the
/// columns a_j, j in Z. The first cols coordinates of each product column
/// are the terminal (last) row. Equals core::find_core on the same grid.
core::CoreMatrix find_grid_core(GridSpec g);
/// Square n x n grid.
core::CoreMatrix find_grid_core(std::size_t n);

/// Lights-out solver for one grid shape. The grid is stored internally with
/// the shorter side as its rows' length so the forcing set is as small as
/// possible; boards are transposed on the way in and out.
class LightsOut {
 public:
  explicit LightsOut(GridSpec g);

  const GridSpec& grid() const { return grid_; }
  const GridSpec& internal_grid() const { return internal_; }
  bool transposed() const { return transposed_; }
  const core::SolverHandle& handle() const { return handle_; }

  /// Press pattern x with A x = b, or std::nullopt if the board cannot be
  /// cleared. Throws std::invalid_argument on a board of another shape.
  std::optional<BoardState> solve(const BoardState& board) const;

 private:
  GridSpec grid_;
  GridSpec internal_;
  bool transposed_;
  core::SolverHandle handle_;
};

inline LightsOut lightsout_preprocess(GridSpec g) { return LightsOut(g); }
inline std::optional<BoardState> solve_board(const LightsOut& h, const BoardState& b) {
  return h.solve(b);
}

/// Flips the closed neighborhood of (r, c). Throws std::out_of_range.
BoardState press(const BoardState& board, std::size_t r, std::size_t c);

/// A x for uniformly random presses x; always solvable. Deterministic in seed.
BoardState random_solvable(GridSpec g, std::uint64_t seed);

/// First pressed cell in row-major order, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_press(const BoardState& presses);

}  // namespace zfsolve::grid
