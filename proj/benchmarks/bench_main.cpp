#include <benchmark/benchmark.h>

#include <random>

#include "zfsolve/core/solver.hpp"
#include "zfsolve/grid/lights_out.hpp"
#include "zfsolve/la/dense_matrix.hpp"
#include "zfsolve/zf/instance.hpp"

using namespace zfsolve;

static void BM_GridSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const grid::LightsOut h({n, n});
  const auto board = grid::random_solvable({n, n}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(h.solve(board));
}
BENCHMARK(BM_GridSolve)->RangeMultiplier(2)->Range(16, 256)->Unit(benchmark::kMicrosecond);

static void BM_FindGridCore(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(grid::find_grid_core(n));
}
BENCHMARK(BM_FindGridCore)->RangeMultiplier(2)->Range(16, 512)->Unit(benchmark::kMillisecond);

static void BM_GenericFindCoreOnGrid(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = grid::grid_matrix({n, n});
  std::vector<Index> z(n);
  for (Index j = 0; j < n; ++j) z[j] = j;
  const auto plan = zf::forcing_plan(zf::pattern_graph(a), z);
  for (auto _ : state) benchmark::DoNotOptimize(core::find_core(a, plan));
}
BENCHMARK(BM_GenericFindCoreOnGrid)->RangeMultiplier(2)->Range(16, 128)->Unit(benchmark::kMillisecond);

static void BM_RandomInstanceSolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto inst = zf::random_instance(n, 8, 0.05, ff::FieldSpec::prime(257), 3);
  const auto h = core::preprocess(inst.a, inst.zfs);
  std::mt19937_64 rng(5);
  std::vector<la::Residue> x(n);
  for (auto& v : x) v = static_cast<la::Residue>(rng() % 257);
  const auto b = la::spmv(inst.a, la::Vector(inst.a.spec(), x));
  for (auto _ : state) benchmark::DoNotOptimize(h.solve(b));
}
BENCHMARK(BM_RandomInstanceSolve)->RangeMultiplier(4)->Range(64, 4096)->Unit(benchmark::kMicrosecond);

static void BM_Gf2DenseMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(9);
  la::DenseMatrix a(ff::FieldSpec::gf2(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, rng() & 1);
  for (auto _ : state) benchmark::DoNotOptimize(la::dense_mul(a, a));
}
BENCHMARK(BM_Gf2DenseMul)->RangeMultiplier(2)->Range(64, 1024)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
