#include <stdexcept>
#include <string>

#include "zfsolve/core/solver.hpp"

namespace zfsolve::core {

using la::Residue;
using la::Vector;

namespace {

void check_vector(const la::SparseMatrix& a, const Vector& b) {
  if (!(a.spec() == b.spec())) throw ff::FieldMismatch();
  if (b.size() != a.rows()) {
    throw std::invalid_argument("right-hand side has length " + std::to_string(b.size()) +
                                ", expected " + std::to_string(a.rows()));
  }
}

// forcing() on raw residues into a caller-provided zeroed buffer.
void force_into(const la::SparseMatrix& a, const zf::ForcingPlan& plan,
                std::span<const Residue> b, std::vector<Residue>& x) {
  const auto& f = a.spec();
  for (Index u : plan.order()) {
    const Index p = plan.parent(u);
    const Residue pivot = a.at(p, u);
    if (pivot == 0) {
      throw std::invalid_argument("forcing plan does not match matrix: A(" + std::to_string(p + 1) +
                                  ", " + std::to_string(u + 1) + ") is zero");
    }
    const Residue residual = f.sub(b[p], la::row_dot(a, p, x));
    x[u] = f.is_gf2() ? residual : f.div(residual, pivot);
  }
}

}  // namespace

Vector forcing(const la::SparseMatrix& a, const zf::ForcingPlan& plan, const Vector& b) {
  check_vector(a, b);
  if (!a.is_square() || plan.size() != a.rows()) {
    throw std::invalid_argument("forcing plan size does not match matrix");
  }
  std::vector<Residue> x(a.rows(), 0);
  force_into(a, plan, b.values(), x);
  return Vector(a.spec(), std::move(x));
}

CoreMatrix find_core(const la::SparseMatrix& a, const zf::ForcingPlan& plan) {
  if (!a.is_square() || plan.size() != a.rows()) {
    throw std::invalid_argument("forcing plan size does not match matrix");
  }
  const auto& f = a.spec();
  const auto& terminals = plan.terminals();
  const auto& z = plan.zfs();
  CoreMatrix core{la::DenseMatrix(f, terminals.size(), z.size()), terminals, z};

  for (std::size_t j = 0; j < z.size(); ++j) {
    const Vector av = la::column(a, z[j]);
    const Vector l = forcing(a, plan, av);
    for (std::size_t i = 0; i < terminals.size(); ++i) {
      const Index t = terminals[i];
      core.b.set(i, j, f.sub(av[t], la::row_dot(a, t, l.values())));
    }
  }
  return core;
}

SolverHandle::SolverHandle(la::SparseMatrix a, zf::ForcingPlan plan, CoreMatrix core)
    : a_(std::move(a)), plan_(std::move(plan)), core_(std::move(core)) {
  if (!a_.is_square() || plan_.size() != a_.rows()) {
    throw std::invalid_argument("forcing plan size does not match matrix");
  }
  if (core_.row_labels != plan_.terminals() || core_.col_labels != plan_.zfs()) {
    throw std::invalid_argument("core matrix labels do not match the forcing plan");
  }
  if (!(core_.b.spec() == a_.spec()) || core_.b.rows() != core_.row_labels.size() ||
      core_.b.cols() != core_.col_labels.size()) {
    throw std::invalid_argument("core matrix shape or field does not match");
  }
  fact_ = la::factorize(core_.b);
}

void SolverHandle::check_rhs(const Vector& b) const { check_vector(a_, b); }

Vector SolverHandle::apply_L(const Vector& b) const { return forcing(a_, plan_, b); }

Vector SolverHandle::apply_R(const Vector& b) const {
  check_rhs(b);
  return b - la::spmv(a_, apply_L(b));
}

Vector SolverHandle::r_on_terminals(const Vector& b) const {
  check_rhs(b);
  const auto& f = a_.spec();
  std::vector<Residue> z(size(), 0);
  force_into(a_, plan_, b.values(), z);
  const auto& terminals = plan_.terminals();
  std::vector<Residue> out(terminals.size());
  for (std::size_t i = 0; i < terminals.size(); ++i) {
    out[i] = f.sub(b[terminals[i]], la::row_dot(a_, terminals[i], z));
  }
  return Vector(f, std::move(out));
}

std::optional<Vector> SolverHandle::solve(const Vector& b) const {
  check_rhs(b);
  const auto& f = a_.spec();
  const std::size_t n = size();

  const auto y = fact_.solve(r_on_terminals(b));
  if (!y) return std::nullopt;

  // x' carries y on Z; the rest comes from forcing on b - A x'.
  std::vector<Residue> x(n, 0);
  const auto& z = plan_.zfs();
  for (std::size_t j = 0; j < z.size(); ++j) x[z[j]] = (*y)[j];

  std::vector<Residue> rest(n);
  for (Index i = 0; i < n; ++i) rest[i] = f.sub(b[i], la::row_dot(a_, i, x));
  std::vector<Residue> lifted(n, 0);
  force_into(a_, plan_, rest, lifted);
  for (Index i = 0; i < n; ++i) x[i] = f.add(x[i], lifted[i]);

  for (Index i = 0; i < n; ++i) {
    if (la::row_dot(a_, i, x) != b[i]) return std::nullopt;
  }
  return Vector(f, std::move(x));
}

SolverHandle preprocess(const la::SparseMatrix& a, std::span<const Index> z) {
  auto plan = zf::forcing_plan(zf::pattern_graph(a), z);
  auto core = find_core(a, plan);
  return SolverHandle(a, std::move(plan), std::move(core));
}

}  // namespace zfsolve::core
