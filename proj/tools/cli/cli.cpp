#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>

#include "CLI11.hpp"
#include "svc/server.hpp"
#include "zfsolve/core/solver.hpp"
#include "zfsolve/grid/lights_out.hpp"
#include "zfsolve/io/formats.hpp"
#include "zfsolve/la/gaussian.hpp"
#include "zfsolve/zf/forcing_plan.hpp"

namespace zfsolve::cli {

namespace {

// Failure that maps to exit code 1 with a one-line message.
class CommandError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class T, class Parse>
T load(const std::string& path, Parse&& parse) {
  const std::string text = io::read_file(path);
  try {
    return parse(text);
  } catch (const io::ParseError& e) {
    throw CommandError(path + ": " + e.what());
  }
}

la::SparseMatrix load_matrix(const std::string& path) {
  return load<la::SparseMatrix>(path, [](const std::string& t) { return io::parse_matrix(t); });
}

std::vector<Index> load_zfs(const std::string& path, std::size_t n) {
  auto z = load<std::vector<Index>>(path, [](const std::string& t) { return io::parse_zfs(t); });
  for (auto v : z)
    if (v >= n) throw CommandError(path + ": vertex " + std::to_string(v + 1) + " out of range");
  return z;
}

la::Vector load_vector(const std::string& path, const ff::FieldSpec& spec, std::size_t n) {
  auto b = load<la::Vector>(path, [&](const std::string& t) { return io::parse_vector(t, spec); });
  if (b.size() != n) {
    throw CommandError(path + ": expected " + std::to_string(n) + " values, found " + std::to_string(b.size()));
  }
  return b;
}

void print_core_summary(std::ostream& out, const std::string& path, std::size_t n, const core::CoreMatrix& c) {
  out << "wrote " << path << ": n=" << n << " k=" << c.order() << " rank=" << la::rank(c.b) << '\n';
}

struct SolveArgs {
  std::string a, b, z, core;
};

int cmd_solve(const SolveArgs& args, std::ostream& out) {
  const auto a = load_matrix(args.a);
  if (!a.is_square()) throw CommandError(args.a + ": matrix must be square");
  const auto z = load_zfs(args.z, a.rows());
  const auto b = load_vector(args.b, a.spec(), a.rows());

  std::optional<core::SolverHandle> handle;
  if (args.core.empty()) {
    handle.emplace(core::preprocess(a, z));
  } else {
    auto cache = load<io::CoreCache>(args.core, [](const std::string& t) { return io::parse_core_cache(t); });
    if (!(cache.spec == a.spec()) || cache.n != a.rows()) {
      throw CommandError(args.core + ": core cache does not match the matrix");
    }
    auto plan = zf::forcing_plan(zf::pattern_graph(a), z);
    try {
      handle.emplace(a, std::move(plan), std::move(cache.core));
    } catch (const std::invalid_argument& e) {
      throw CommandError(args.core + ": " + e.what());
    }
  }

  const auto x = handle->solve(b);
  if (!x) {
    out << "NO SOLUTION\n";
    return kNoSolution;
  }
  out << io::serialize_vector(*x);
  return kOk;
}

int cmd_core(const SolveArgs& args, const std::string& output, std::ostream& out) {
  const auto a = load_matrix(args.a);
  if (!a.is_square()) throw CommandError(args.a + ": matrix must be square");
  const auto z = load_zfs(args.z, a.rows());
  const auto h = core::preprocess(a, z);
  io::write_file(output, io::serialize_core_cache({a.spec(), a.rows(), h.core()}));
  print_core_summary(out, output, a.rows(), h.core());
  return kOk;
}

struct BoardArgs {
  std::size_t rows = 0, cols = 0;
  std::string state;
  bool all_on = false;
  bool random = false;
  std::uint64_t seed = 0;
};

int cmd_lightsout_solve(const BoardArgs& args, std::ostream& out) {
  std::optional<grid::BoardState> board;
  if (!args.state.empty()) {
    board = load<grid::BoardState>(args.state, [](const std::string& t) { return io::parse_board(t); });
    const auto g = board->spec();
    if ((args.rows && args.rows != g.rows) || (args.cols && args.cols != g.cols)) {
      throw CommandError(args.state + ": board is " + std::to_string(g.rows) + "x" + std::to_string(g.cols) +
                         ", not " + std::to_string(args.rows) + "x" + std::to_string(args.cols));
    }
  } else {
    if (args.rows == 0 || args.cols == 0) throw CommandError("--rows and --cols are required");
    const grid::GridSpec g{args.rows, args.cols};
    board = args.all_on ? grid::BoardState::all_on(g) : grid::random_solvable(g, args.seed);
  }
  const auto x = grid::LightsOut(board->spec()).solve(*board);
  if (!x) {
    out << "NO SOLUTION\n";
    return kNoSolution;
  }
  out << io::serialize_board(*x);
  return kOk;
}

int cmd_lightsout_core(std::size_t n, const std::string& output, std::ostream& out) {
  if (n < 2) throw CommandError("-n must be at least 2");
  const auto c = grid::find_grid_core(n);
  io::write_file(output, io::serialize_core_cache({ff::FieldSpec::gf2(), n * n, c}));
  print_core_summary(out, output, n * n, c);
  return kOk;
}

int cmd_zfs_verify(const std::string& a_path, const std::string& z_path, std::ostream& out) {
  const auto a = load_matrix(a_path);
  if (!a.is_square()) throw CommandError(a_path + ": matrix must be square");
  const auto z = load_zfs(z_path, a.rows());
  if (zf::is_zfs(zf::pattern_graph(a), z)) {
    out << "zero forcing set\n";
    return kOk;
  }
  out << "not a zero forcing set\n";
  return kNoSolution;
}

int cmd_zfs_find(const std::string& a_path, std::ostream& out) {
  const auto a = load_matrix(a_path);
  if (!a.is_square()) throw CommandError(a_path + ": matrix must be square");
  out << io::serialize_zfs(zf::greedy_find_zfs(zf::pattern_graph(a)));
  return kOk;
}

using Clock = std::chrono::steady_clock;

double elapsed_us(Clock::time_point start) {
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const auto m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

// Dense elimination on an n^2 x n^2 system is only run for small boards.
constexpr std::size_t kDenseLimit = 32;
constexpr std::size_t kDenseSolves = 5;

int cmd_bench_grid(const std::vector<std::size_t>& sizes, std::size_t solves, std::uint64_t seed,
                   std::ostream& out) {
  if (solves == 0) throw CommandError("--solves must be positive");
  char line[128];
  std::snprintf(line, sizeof line, "%6s %6s %15s %17s %16s\n", "n", "k", "preprocess_ms", "solve_median_us",
                "dense_solve_us");
  out << line;
  for (const auto n : sizes) {
    if (n == 0) throw CommandError("--sizes entries must be positive");
    const grid::GridSpec g{n, n};
    auto start = Clock::now();
    const grid::LightsOut h(g);
    const double pre_ms = elapsed_us(start) / 1000.0;

    std::vector<grid::BoardState> boards;
    for (std::size_t i = 0; i < solves; ++i) boards.push_back(grid::random_solvable(g, seed + i));
    std::vector<double> times;
    for (const auto& b : boards) {
      start = Clock::now();
      const auto x = h.solve(b);
      times.push_back(elapsed_us(start));
      if (!x) throw CommandError("internal error: random solvable board reported unsolvable");
    }

    std::string dense = "-";
    if (n <= kDenseLimit) {
      const auto a = la::dense_from(grid::grid_matrix(g));
      std::vector<double> dt;
      for (std::size_t i = 0; i < std::min(solves, kDenseSolves); ++i) {
        start = Clock::now();
        (void)la::dense_gaussian_solve(a, boards[i].cells());
        dt.push_back(elapsed_us(start));
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.1f", median(dt));
      dense = buf;
    }
    std::snprintf(line, sizeof line, "%6zu %6zu %15.2f %17.1f %16s\n", n, h.handle().k(), pre_ms, median(times),
                  dense.c_str());
    out << line;
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear systems over finite fields via zero forcing sets", "zfsolve"};
  app.require_subcommand(1);
  std::function<int()> action;

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve A x = b given a zero forcing set Z");
  solve->add_option("-A", solve_args.a, "Matrix file (.zfm)")->required();
  solve->add_option("-b", solve_args.b, "Right-hand side, one value per line")->required();
  solve->add_option("-Z", solve_args.z, "Zero forcing set, one 1-based index per line")->required();
  solve->add_option("--core", solve_args.core, "Core cache written by 'core' or 'lightsout core'");
  solve->callback([&] { action = [&] { return cmd_solve(solve_args, out); }; });

  SolveArgs core_args;
  std::string core_output;
  auto* core_cmd = app.add_subcommand("core", "Compute the core matrix and write a core cache");
  core_cmd->add_option("-A", core_args.a, "Matrix file (.zfm)")->required();
  core_cmd->add_option("-Z", core_args.z, "Zero forcing set file")->required();
  core_cmd->add_option("-o", core_output, "Output cache file")->required();
  core_cmd->callback([&] { action = [&] { return cmd_core(core_args, core_output, out); }; });

  auto* lightsout = app.add_subcommand("lightsout", "Lights-out on rectangular grids");
  lightsout->require_subcommand(1);
  BoardArgs board_args;
  auto* lo_solve = lightsout->add_subcommand("solve", "Print a press pattern that clears the board");
  lo_solve->add_option("--rows", board_args.rows, "Board rows")->check(CLI::PositiveNumber);
  lo_solve->add_option("--cols", board_args.cols, "Board columns")->check(CLI::PositiveNumber);
  auto* state = lo_solve->add_option("--state", board_args.state, "Board file");
  auto* all_on = lo_solve->add_flag("--all-on", board_args.all_on, "Start with every light on");
  auto* random = lo_solve->add_flag("--random", board_args.random, "Start from a random solvable board");
  lo_solve->add_option("--seed", board_args.seed, "Seed for --random")->needs(random);
  state->excludes(all_on)->excludes(random);
  all_on->excludes(random);
  lo_solve->callback([&] {
    if (board_args.state.empty() && !board_args.all_on && !board_args.random) {
      throw CLI::ValidationError("one of --state, --all-on, --random is required");
    }
    action = [&] { return cmd_lightsout_solve(board_args, out); };
  });
  std::size_t grid_n = 0;
  std::string grid_output;
  auto* lo_core = lightsout->add_subcommand("core", "Write the core cache of the n x n grid");
  lo_core->add_option("-n", grid_n, "Grid size")->required();
  lo_core->add_option("-o", grid_output, "Output cache file")->required();
  lo_core->callback([&] { action = [&] { return cmd_lightsout_core(grid_n, grid_output, out); }; });

  auto* zfs = app.add_subcommand("zfs", "Zero forcing set utilities");
  zfs->require_subcommand(1);
  std::string zfs_a, zfs_z;
  auto* verify = zfs->add_subcommand("verify", "Check that Z forces the pattern of A (exit 2 if not)");
  verify->add_option("-A", zfs_a, "Matrix file (.zfm)")->required();
  verify->add_option("-Z", zfs_z, "Zero forcing set file")->required();
  verify->callback([&] { action = [&] { return cmd_zfs_verify(zfs_a, zfs_z, out); }; });
  auto* find = zfs->add_subcommand("find", "Greedy zero forcing set, one 1-based index per line");
  find->add_option("-A", zfs_a, "Matrix file (.zfm)")->required();
  find->callback([&] { action = [&] { return cmd_zfs_find(zfs_a, out); }; });

  auto* bench = app.add_subcommand("bench", "Timing tables");
  bench->require_subcommand(1);
  std::vector<std::size_t> sizes{64, 128, 256};
  std::size_t solves = 100;
  std::uint64_t bench_seed = 1;
  auto* bench_grid = bench->add_subcommand("grid", "Lights-out preprocessing and per-solve times");
  bench_grid->add_option("--sizes", sizes, "Comma-separated grid sizes")->delimiter(',');
  bench_grid->add_option("--solves", solves, "Random boards per size");
  bench_grid->add_option("--seed", bench_seed, "Seed of the first random board");
  bench_grid->callback([&] { action = [&] { return cmd_bench_grid(sizes, solves, bench_seed, out); }; });

  svc::ServerOptions server;
  std::size_t max_size = server.limits.max_rows;
  auto* serve = app.add_subcommand("serve", "Run the lights-out HTTP service");
  serve->add_option("--port", server.port, "TCP port")->envname("ZFSOLVE_PORT")->check(CLI::Range(1, 65535));
  serve->add_option("--host", server.host, "Bind address");
  serve->add_option("--allow-origin", server.allow_origin, "Access-Control-Allow-Origin value")
      ->envname("ZFSOLVE_ALLOW_ORIGIN");
  serve->add_option("--max-size", max_size, "Largest accepted rows and cols")->check(CLI::PositiveNumber);
  serve->callback([&] {
    action = [&] {
      server.limits = {max_size, max_size};
      out << "listening on http://" << server.host << ':' << server.port << std::endl;
      if (!svc::serve(server)) throw CommandError("cannot listen on " + server.host + ":" + std::to_string(server.port));
      return kOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace zfsolve::cli
