#include <numeric>
#include <random>
#include <stdexcept>

#include "zfsolve/grid/lights_out.hpp"
#include "zfsolve/la/power.hpp"
#include "zfsolve/zf/forcing_plan.hpp"

namespace zfsolve::grid {

using ff::FieldSpec;
using la::Residue;

namespace {

void check_grid(GridSpec g) {
  if (g.rows == 0 || g.cols == 0) throw std::invalid_argument("grid dimensions must be positive");
}

std::vector<Index> first_row(GridSpec g) {
  std::vector<Index> z(g.cols);
  std::iota(z.begin(), z.end(), Index{0});
  return z;
}

GridSpec orient(GridSpec g) { return g.rows >= g.cols ? g : g.transposed(); }

}  // namespace

BoardState::BoardState(GridSpec spec) : spec_(spec), cells_(FieldSpec::gf2(), spec.cells()) {
  check_grid(spec);
}

BoardState::BoardState(GridSpec spec, la::Vector cells) : spec_(spec), cells_(std::move(cells)) {
  check_grid(spec);
  if (!cells_.spec().is_gf2() || cells_.size() != spec.cells()) {
    throw std::invalid_argument("board cells must be a GF(2) vector of length rows*cols");
  }
}

BoardState BoardState::all_on(GridSpec spec) {
  return BoardState(spec, la::Vector(FieldSpec::gf2(), std::vector<Residue>(spec.cells(), 1)));
}

void BoardState::set(std::size_t r, std::size_t c, bool on) {
  if (r >= spec_.rows || c >= spec_.cols) throw std::out_of_range("cell out of range");
  cells_.set(spec_.index(r, c), on ? 1 : 0);
}

std::size_t BoardState::lit_count() const { return cells_.support().size(); }

BoardState BoardState::transposed() const {
  const GridSpec t = spec_.transposed();
  std::vector<Residue> v(t.cells());
  for (std::size_t r = 0; r < spec_.rows; ++r) {
    for (std::size_t c = 0; c < spec_.cols; ++c) v[t.index(c, r)] = cells_[spec_.index(r, c)];
  }
  return BoardState(t, la::Vector(FieldSpec::gf2(), std::move(v)));
}

la::SparseMatrix grid_matrix(GridSpec g) {
  check_grid(g);
  std::vector<la::Triplet> entries;
  entries.reserve(5 * g.cells());
  for (std::size_t r = 0; r < g.rows; ++r) {
    for (std::size_t c = 0; c < g.cols; ++c) {
      const Index u = g.index(r, c);
      entries.push_back({u, u, 1});
      if (r > 0) entries.push_back({u, g.index(r - 1, c), 1});
      if (r + 1 < g.rows) entries.push_back({u, g.index(r + 1, c), 1});
      if (c > 0) entries.push_back({u, g.index(r, c - 1), 1});
      if (c + 1 < g.cols) entries.push_back({u, g.index(r, c + 1), 1});
    }
  }
  return la::SparseMatrix::from_triplets(FieldSpec::gf2(), g.cells(), g.cells(), std::move(entries));
}

namespace {

la::BitMatrix n_bits(std::size_t n) {
  la::BitMatrix m(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = (i == 0 ? 0 : i - 1); j <= i + 1 && j < n; ++j) m.set(i, j, true);
    m.set(i, n + i, true);
    m.set(n + i, i, true);
  }
  return m;
}

}  // namespace

la::DenseMatrix n_matrix(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n_matrix requires n >= 1");
  return la::DenseMatrix::from_bits(n_bits(n));
}

core::CoreMatrix find_grid_core(GridSpec g) {
  check_grid(g);
  const std::size_t k = g.cols;

  const la::BitMatrix m = la::power_by_squaring(
      n_bits(k), g.rows - 1, la::BitMatrix::identity(2 * k),
      [](const la::BitMatrix& a, const la::BitMatrix& b) { return la::multiply(a, b); });

  // Columns a_j, j in the first row, are supported on the first two rows.
  la::BitMatrix stack(2 * k, k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = (j == 0 ? 0 : j - 1); i <= j + 1 && i < k; ++i) stack.set(i, j, true);
    if (g.rows > 1) stack.set(k + j, j, true);
  }
  const la::BitMatrix product = la::multiply(m, stack);

  core::CoreMatrix out{la::DenseMatrix(FieldSpec::gf2(), k, k), {}, first_row(g)};
  for (std::size_t i = 0; i < k; ++i) {
    out.row_labels.push_back(g.index(g.rows - 1, i));
    for (std::size_t j = 0; j < k; ++j) {
      if (product.get(i, j)) out.b.set(i, j, 1);
    }
  }
  return out;
}

core::CoreMatrix find_grid_core(std::size_t n) { return find_grid_core(GridSpec{n, n}); }

namespace {

core::SolverHandle grid_handle(GridSpec internal) {
  auto a = grid_matrix(internal);
  auto plan = zf::forcing_plan(zf::pattern_graph(a), first_row(internal));
  auto core = find_grid_core(internal);
  return core::SolverHandle(std::move(a), std::move(plan), std::move(core));
}

}  // namespace

LightsOut::LightsOut(GridSpec g)
    : grid_(g), internal_(orient(g)), transposed_(g.rows < g.cols), handle_(grid_handle(internal_)) {}

std::optional<BoardState> LightsOut::solve(const BoardState& board) const {
  if (!(board.spec() == grid_)) throw std::invalid_argument("board does not match the solver's grid");
  const BoardState inner = transposed_ ? board.transposed() : board;
  auto x = handle_.solve(inner.cells());
  if (!x) return std::nullopt;
  BoardState presses(internal_, std::move(*x));
  return transposed_ ? presses.transposed() : presses;
}

BoardState press(const BoardState& board, std::size_t r, std::size_t c) {
  const GridSpec g = board.spec();
  if (r >= g.rows || c >= g.cols) throw std::out_of_range("press outside the board");
  BoardState out = board;
  auto flip = [&](std::size_t rr, std::size_t cc) { out.set(rr, cc, !out.on(rr, cc)); };
  flip(r, c);
  if (r > 0) flip(r - 1, c);
  if (r + 1 < g.rows) flip(r + 1, c);
  if (c > 0) flip(r, c - 1);
  if (c + 1 < g.cols) flip(r, c + 1);
  return out;
}

BoardState random_solvable(GridSpec g, std::uint64_t seed) {
  check_grid(g);
  std::mt19937_64 rng(seed);
  std::vector<Residue> x(g.cells());
  for (auto& v : x) v = static_cast<Residue>(rng() & 1u);
  return BoardState(g, la::spmv(grid_matrix(g), la::Vector(FieldSpec::gf2(), std::move(x))));
}

std::optional<std::pair<std::size_t, std::size_t>> first_press(const BoardState& presses) {
  const auto s = presses.cells().support();
  if (s.empty()) return std::nullopt;
  const auto cols = presses.spec().cols;
  return std::make_pair(s.front() / cols, s.front() % cols);
}

}  // namespace zfsolve::grid
