#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "zfsolve/core/solver.hpp"
#include "zfsolve/grid/lights_out.hpp"
#include "zfsolve/la/gaussian.hpp"
#include "zfsolve/zf/instance.hpp"

using namespace zfsolve;
using namespace zfsolve::testing;
using la::DenseMatrix;
using la::SparseMatrix;
using la::Vector;

namespace {

const auto kGf2 = ff::FieldSpec::gf2();
const auto kGf5 = ff::FieldSpec::prime(5);

SparseMatrix identity2(const ff::FieldSpec& f) {
  return SparseMatrix::from_triplets(f, 2, 2, {{0, 0, 1}, {1, 1, 1}});
}

zf::ForcingPlan plan_for(const SparseMatrix& a, std::vector<Index> z) {
  return zf::forcing_plan(zf::pattern_graph(a), z);
}

bool supported_in(const Vector& v, const std::vector<bool>& allowed) {
  for (auto i : v.support())
    if (!allowed[i]) return false;
  return true;
}

struct Family {
  ff::FieldSpec field;
  std::size_t max_n;
};

const Family kFamilies[] = {{kGf2, 60}, {kGf5, 60}, {ff::FieldSpec::prime(257), 60}};

}  // namespace

TEST(Forcing, Examples) {
  const auto plan = plan_for(p3(), {0});
  EXPECT_EQ(core::forcing(p3(), plan, gf2v({1, 0, 1})), gf2v({0, 1, 0}));
  EXPECT_EQ(core::forcing(p3(), plan, gf2v({0, 1, 0})), gf2v({0, 0, 1}));

  const auto id = identity2(kGf5);
  EXPECT_EQ(core::forcing(id, plan_for(id, {0, 1}), vec(kGf5, {3, 4})), vec(kGf5, {0, 0}));
}

TEST(Forcing, SatisfiesParentRows) {
  std::mt19937_64 rng(61);
  for (const auto& fam : kFamilies) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % fam.max_n;
      const auto inst = zf::random_instance(n, 1 + rng() % std::min<std::size_t>(n, 8), 0.1, fam.field, rng());
      const auto plan = plan_for(inst.a, inst.zfs);
      const auto b = random_vector(fam.field, n, rng);
      const auto x = core::forcing(inst.a, plan, b);
      const auto ax = la::spmv(inst.a, x);
      for (auto u : plan.order()) ASSERT_EQ(ax[plan.parent(u)], b[plan.parent(u)]);
      for (auto z : inst.zfs) ASSERT_EQ(x[z], 0u);
    }
  }
}

TEST(Forcing, Errors) {
  const auto plan = plan_for(p3(), {0});
  EXPECT_THROW(core::forcing(p3(), plan, gf2v({1, 0})), std::invalid_argument);
  EXPECT_THROW(core::forcing(p3(), plan, vec(kGf5, {1, 0, 0})), ff::FieldMismatch);
  EXPECT_THROW(core::forcing(identity2(kGf2), plan, gf2v({1, 0})), std::invalid_argument);
  // Plan of another matrix whose first force uses the edge (1, 3), which is
  // zero in P3.
  const auto other = SparseMatrix::from_triplets(kGf2, 3, 3, {{0, 2, 1}, {2, 1, 1}, {1, 0, 1}});
  const auto other_plan = plan_for(other, {0});
  EXPECT_THROW(core::forcing(p3(), other_plan, gf2v({1, 0, 1})), std::invalid_argument);
}

TEST(Operators, Examples) {
  const auto h = core::preprocess(p3(), std::vector<Index>{0});
  EXPECT_TRUE(h.apply_R(gf2v({1, 0, 1})).is_zero());
  EXPECT_TRUE(h.apply_R(la::column(p3(), 1)).is_zero());
  EXPECT_TRUE(h.apply_L(gf2v({0, 0, 0})).is_zero());
  EXPECT_TRUE(h.apply_R(gf2v({0, 0, 0})).is_zero());
  EXPECT_EQ(h.r_on_terminals(gf2v({1, 0, 0})), gf2v({1}));
  EXPECT_THROW(h.apply_R(gf2v({1})), std::invalid_argument);
}

TEST(FindCore, Examples) {
  const auto id = identity2(kGf2);
  const auto ci = core::find_core(id, plan_for(id, {0, 1}));
  EXPECT_EQ(ci.b, DenseMatrix::identity(kGf2, 2));
  EXPECT_EQ(ci.row_labels, (std::vector<Index>{0, 1}));

  const auto cp = core::find_core(p3(), plan_for(p3(), {0}));
  EXPECT_EQ(cp.b, DenseMatrix(kGf2, 1, 1));
  EXPECT_EQ(cp.row_labels, std::vector<Index>{2});
  EXPECT_EQ(cp.col_labels, std::vector<Index>{0});

  const auto g3 = grid::grid_matrix({3, 3});
  EXPECT_EQ(core::find_core(g3, plan_for(g3, {0, 1, 2})), grid::find_grid_core(3));
}

TEST(FindCore, ColumnsAreRestrictedResiduals) {
  std::mt19937_64 rng(67);
  for (const auto& fam : kFamilies) {
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 1 + rng() % 30;
      const auto inst = zf::random_instance(n, 1 + rng() % std::min<std::size_t>(n, 8), 0.15, fam.field, rng());
      const auto h = core::preprocess(inst.a, inst.zfs);
      const auto& c = h.core();
      for (std::size_t j = 0; j < c.order(); ++j) {
        const auto r = h.apply_R(la::column(inst.a, c.col_labels[j]));
        for (std::size_t i = 0; i < c.order(); ++i) ASSERT_EQ(c.b.at(i, j), r[c.row_labels[i]]);
      }
    }
  }
}

TEST(Preprocess, Examples) {
  const auto hi = core::preprocess(identity2(kGf2), std::vector<Index>{0, 1});
  EXPECT_EQ(hi.k(), 2u);
  EXPECT_EQ(hi.factorization().rank(), 2u);

  const auto hp = core::preprocess(p3(), std::vector<Index>{0});
  EXPECT_EQ(hp.k(), 1u);
  EXPECT_EQ(hp.factorization().rank(), 0u);

  const auto hg = core::preprocess(grid::grid_matrix({3, 3}), std::vector<Index>{0, 1, 2});
  EXPECT_EQ(hg.k(), 3u);
  EXPECT_EQ(hg.auxiliary_elements(), 18u);

  EXPECT_THROW(core::preprocess(identity2(kGf2), std::vector<Index>{0}), zf::NotZeroForcingSet);
}

TEST(SolverHandle, RejectsMismatchedCore) {
  const auto plan = plan_for(p3(), {0});
  auto c = core::find_core(p3(), plan);
  c.row_labels = {1};
  EXPECT_THROW(core::SolverHandle(p3(), plan, c), std::invalid_argument);
  auto d = core::find_core(p3(), plan);
  d.b = DenseMatrix(kGf5, 1, 1);
  EXPECT_THROW(core::SolverHandle(p3(), plan, d), std::invalid_argument);
}

TEST(Solve, Examples) {
  const auto hi = core::preprocess(identity2(kGf5), std::vector<Index>{0, 1});
  EXPECT_EQ(core::solve(hi, vec(kGf5, {1, 4})), vec(kGf5, {1, 4}));

  const auto hp = core::preprocess(p3(), std::vector<Index>{0});
  const auto x = core::solve(hp, gf2v({1, 0, 1}));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, gf2v({0, 1, 0}));
  // Brute force: two solutions exist; ours is the one with x_Z = y = 0.
  EXPECT_EQ(brute_force_solutions(la::dense_from(p3()), gf2v({1, 0, 1})).size(), 2u);

  EXPECT_TRUE(brute_force_solutions(la::dense_from(p3()), gf2v({1, 0, 0})).empty());
  EXPECT_FALSE(core::solve(hp, gf2v({1, 0, 0})).has_value());

  EXPECT_THROW(core::solve(hp, gf2v({1, 0})), std::invalid_argument);
  EXPECT_THROW(core::solve(hp, vec(kGf5, {1, 0, 0})), ff::FieldMismatch);
}

TEST(Solve, AgreesWithBruteForceOnTinySystems) {
  std::mt19937_64 rng(71);
  for (const auto& f : {kGf2, ff::FieldSpec::prime(3)}) {
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + rng() % (f.is_gf2() ? 10 : 6);
      const auto inst = zf::random_instance(n, 1 + rng() % n, 0.3, f, rng());
      const auto h = core::preprocess(inst.a, inst.zfs);
      const auto dense = la::dense_from(inst.a);
      const auto b = random_vector(f, n, rng);
      const auto sols = brute_force_solutions(dense, b);
      const auto x = h.solve(b);
      ASSERT_EQ(x.has_value(), !sols.empty());
      if (x) ASSERT_NE(std::find(sols.begin(), sols.end(), ints(*x)), sols.end());
    }
  }
}

// The properties below run over the same instance families as the
// acceptance suite but with fewer right-hand sides.
class CoreProperties : public ::testing::TestWithParam<int> {};

TEST_P(CoreProperties, LinearityOfLAndR) {
  const auto& fam = kFamilies[GetParam()];
  std::mt19937_64 rng(73 + GetParam());
  int triples = 0;
  for (int inst_no = 0; inst_no < 20; ++inst_no) {
    const std::size_t n = 1 + rng() % fam.max_n;
    const auto inst = zf::random_instance(n, 1 + rng() % std::min<std::size_t>(n, 8), 0.1, fam.field, rng());
    const auto h = core::preprocess(inst.a, inst.zfs);
    for (int t = 0; t < 60; ++t, ++triples) {
      const auto b1 = random_vector(fam.field, n, rng);
      const auto b2 = random_vector(fam.field, n, rng);
      const auto alpha = static_cast<la::Residue>(rng() % fam.field.modulus());
      const auto combo = la::scale(alpha, b1) + b2;
      ASSERT_EQ(h.apply_L(combo), la::scale(alpha, h.apply_L(b1)) + h.apply_L(b2));
      ASSERT_EQ(h.apply_R(combo), la::scale(alpha, h.apply_R(b1)) + h.apply_R(b2));
    }
  }
  EXPECT_GE(triples, 1000);
}

TEST_P(CoreProperties, SupportsAndKernelColumns) {
  const auto& fam = kFamilies[GetParam()];
  std::mt19937_64 rng(79 + GetParam());
  for (int inst_no = 0; inst_no < 40; ++inst_no) {
    const std::size_t n = 1 + rng() % fam.max_n;
    const auto inst = zf::random_instance(n, 1 + rng() % std::min<std::size_t>(n, 8), 0.1, fam.field, rng());
    const auto h = core::preprocess(inst.a, inst.zfs);
    std::vector<bool> off_z(n, true), on_t(n, false);
    for (auto z : inst.zfs) off_z[z] = false;
    for (auto t : h.plan().terminals()) on_t[t] = true;
    for (int t = 0; t < 30; ++t) {
      const auto b = random_vector(fam.field, n, rng);
      ASSERT_TRUE(supported_in(h.apply_L(b), off_z));
      ASSERT_TRUE(supported_in(h.apply_R(b), on_t));
      ASSERT_EQ(h.r_on_terminals(b), h.apply_R(b).gather(h.plan().terminals()));
    }
    for (Index v = 0; v < n; ++v)
      if (off_z[v]) ASSERT_TRUE(h.apply_R(la::column(inst.a, v)).is_zero());
  }
}

TEST_P(CoreProperties, ColumnsOutsideZAreIndependent) {
  const auto& fam = kFamilies[GetParam()];
  std::mt19937_64 rng(83 + GetParam());
  for (int inst_no = 0; inst_no < 40; ++inst_no) {
    const std::size_t n = 1 + rng() % fam.max_n;
    const std::size_t k = 1 + rng() % std::min<std::size_t>(n, 8);
    const auto inst = zf::random_instance(n, k, 0.1, fam.field, rng());
    std::vector<Index> rows(n), cols;
    for (Index v = 0; v < n; ++v) {
      rows[v] = v;
      if (std::find(inst.zfs.begin(), inst.zfs.end(), v) == inst.zfs.end()) cols.push_back(v);
    }
    ASSERT_EQ(la::rank(la::dense_from(inst.a).submatrix(rows, cols)), n - k);
  }
}

TEST_P(CoreProperties, VerdictMatchesOracleAndNullityIdentity) {
  const auto& fam = kFamilies[GetParam()];
  std::mt19937_64 rng(89 + GetParam());
  for (int inst_no = 0; inst_no < 40; ++inst_no) {
    const std::size_t n = 1 + rng() % fam.max_n;
    const auto inst = zf::random_instance(n, 1 + rng() % std::min<std::size_t>(n, 8), 0.1, fam.field, rng());
    const auto h = core::preprocess(inst.a, inst.zfs);
    const auto dense = la::dense_from(inst.a);
    ASSERT_EQ(n - la::rank(dense), h.k() - la::rank(h.core().b));

    std::vector<Vector> bs;
    for (int t = 0; t < 40; ++t) {
      bs.push_back(t % 2 ? random_vector(fam.field, n, rng)
                         : la::spmv(inst.a, random_vector(fam.field, n, rng)));
    }
    const auto oracle = la::dense_gaussian_solve_many(dense, bs);
    for (std::size_t t = 0; t < bs.size(); ++t) {
      const auto x = h.solve(bs[t]);
      ASSERT_EQ(x.has_value(), oracle[t].has_value());
      if (x) ASSERT_EQ(la::spmv(inst.a, *x), bs[t]);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, CoreProperties, ::testing::Values(0, 1, 2),
                         [](const auto& info) { return kFamilies[info.param].field.is_gf2()
                                                           ? std::string("gf2")
                                                           : "gf" + std::to_string(kFamilies[info.param].field.modulus()); });

TEST(CoreUniqueness, SolutionDeterminedByZCoordinates) {
  // Over GF(2), every solution is x0 + span(kernel). Enumerate all of them
  // and check that two solutions agreeing on Z agree everywhere.
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    const auto inst = zf::random_instance(n, 1 + rng() % n, 0.3, kGf2, rng());
    const auto dense = la::dense_from(inst.a);
    const auto b = la::matvec(dense, random_vector(kGf2, n, rng));
    const auto x0 = la::dense_gaussian_solve(dense, b);
    ASSERT_TRUE(x0.has_value());
    const auto basis = la::nullspace_basis(dense);
    std::vector<Vector> sols;
    for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()); ++mask) {
      Vector x = *x0;
      for (std::size_t i = 0; i < basis.size(); ++i)
        if (mask >> i & 1) x = x + basis[i];
      ASSERT_EQ(la::matvec(dense, x), b);
      sols.push_back(x);
    }
    for (std::size_t i = 0; i < sols.size(); ++i)
      for (std::size_t j = i + 1; j < sols.size(); ++j)
        if (sols[i].gather(inst.zfs) == sols[j].gather(inst.zfs)) ASSERT_EQ(sols[i], sols[j]);
    // And the solver's answer matches the solution with its own Z values.
    const auto x = core::preprocess(inst.a, inst.zfs).solve(b);
    ASSERT_TRUE(x.has_value());
    ASSERT_NE(std::find(sols.begin(), sols.end(), *x), sols.end());
  }
}
