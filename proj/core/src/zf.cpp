#include <algorithm>
#include <functional>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

#include "zfsolve/zf/forcing_plan.hpp"
#include "zfsolve/zf/instance.hpp"
#include "zfsolve/zf/pattern_graph.hpp"

namespace zfsolve::zf {

PatternGraph::PatternGraph(std::size_t n, std::vector<std::pair<Index, Index>> edges) : n_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  out_ptr_.assign(n + 1, 0);
  in_ptr_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    ++out_ptr_[u + 1];
    ++in_ptr_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out_ptr_[i + 1] += out_ptr_[i];
    in_ptr_[i + 1] += in_ptr_[i];
  }
  out_idx_.resize(edges.size());
  in_idx_.resize(edges.size());
  std::vector<std::size_t> out_fill(out_ptr_.begin(), out_ptr_.end() - 1);
  std::vector<std::size_t> in_fill(in_ptr_.begin(), in_ptr_.end() - 1);
  // edges are sorted by (u, v), so both adjacency lists come out sorted.
  for (const auto& [u, v] : edges) {
    out_idx_[out_fill[u]++] = v;
    in_idx_[in_fill[v]++] = u;
  }
}

PatternGraph PatternGraph::from_matrix(const la::SparseMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("pattern graph requires a square matrix");
  std::vector<std::pair<Index, Index>> edges;
  edges.reserve(a.nnz());
  for (Index u = 0; u < a.rows(); ++u) {
    for (Index v : a.row(u).cols) {
      if (u != v) edges.emplace_back(u, v);
    }
  }
  return PatternGraph(a.rows(), std::move(edges));
}

bool PatternGraph::has_edge(Index u, Index v) const {
  const auto out = out_neighbors(u);
  return std::binary_search(out.begin(), out.end(), v);
}

namespace {

// Incremental color-change process. Vertices may be added to the blue set
// between runs; by uniqueness of the final coloring the result equals the
// closure of everything added so far.
class ForcingEngine {
 public:
  explicit ForcingEngine(const PatternGraph& g)
      : g_(g), blue_(g.size(), false), nonblue_out_(g.size()) {
    for (Index v = 0; v < g.size(); ++v) nonblue_out_[v] = g.out_neighbors(v).size();
  }

  void add(Index v) {
    if (v >= g_.size()) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " out of range");
    if (blue_[v]) throw std::invalid_argument("vertex " + std::to_string(v + 1) + " repeated");
    color(v);
  }

  void run() {
    while (!candidates_.empty()) {
      const auto [u, v] = candidates_.top();
      candidates_.pop();
      if (blue_[u]) continue;
      forces_.push_back({u, v});
      color(u);
    }
  }

  std::size_t blue_count() const { return blue_count_; }
  const std::vector<bool>& blue() const { return blue_; }
  std::vector<Force>& forces() { return forces_; }

 private:
  void color(Index v) {
    blue_[v] = true;
    ++blue_count_;
    for (Index w : g_.in_neighbors(v)) {
      if (--nonblue_out_[w] == 1 && blue_[w]) propose(w);
    }
    if (nonblue_out_[v] == 1) propose(v);
  }

  void propose(Index v) {
    for (Index u : g_.out_neighbors(v)) {
      if (!blue_[u]) {
        candidates_.push({u, v});
        return;
      }
    }
  }

  using Candidate = std::pair<Index, Index>;  // (target, parent)

  const PatternGraph& g_;
  std::vector<bool> blue_;
  std::vector<std::size_t> nonblue_out_;
  std::size_t blue_count_ = 0;
  std::priority_queue<Candidate, std::vector<Candidate>, std::greater<>> candidates_;
  std::vector<Force> forces_;
};

}  // namespace

bool Closure::complete() const {
  return std::all_of(blue.begin(), blue.end(), [](bool b) { return b; });
}

std::vector<Index> Closure::colored() const {
  std::vector<Index> out;
  for (Index v = 0; v < blue.size(); ++v) {
    if (blue[v]) out.push_back(v);
  }
  return out;
}

Closure closure(const PatternGraph& g, std::span<const Index> start) {
  ForcingEngine engine(g);
  for (Index v : start) engine.add(v);
  engine.run();
  return {engine.blue(), std::move(engine.forces())};
}

bool is_zfs(const PatternGraph& g, std::span<const Index> z) {
  ForcingEngine engine(g);
  for (Index v : z) engine.add(v);
  engine.run();
  return engine.blue_count() == g.size();
}

ForcingPlan forcing_plan(const PatternGraph& g, std::span<const Index> z) {
  auto c = closure(g, z);
  if (!c.complete()) throw NotZeroForcingSet();

  ForcingPlan plan;
  const std::size_t n = g.size();
  plan.zfs_.assign(z.begin(), z.end());
  plan.parent_.assign(n, ForcingPlan::kNone);
  plan.child_.assign(n, ForcingPlan::kNone);
  plan.order_.reserve(c.forces.size());
  for (const auto& f : c.forces) {
    plan.order_.push_back(f.target);
    plan.parent_[f.target] = f.parent;
    plan.child_[f.parent] = f.target;
  }
  for (Index v = 0; v < n; ++v) {
    if (plan.child_[v] == ForcingPlan::kNone) plan.terminals_.push_back(v);
  }
  return plan;
}

std::vector<std::vector<Index>> ForcingPlan::chains() const {
  std::vector<std::vector<Index>> out;
  out.reserve(zfs_.size());
  for (Index head : zfs_) {
    std::vector<Index> chain{head};
    while (child_[chain.back()] != kNone) chain.push_back(child_[chain.back()]);
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<Index> greedy_find_zfs(const PatternGraph& g) {
  std::vector<Index> z;
  ForcingEngine engine(g);
  Index next = 0;
  while (engine.blue_count() < g.size()) {
    while (engine.blue()[next]) ++next;
    z.push_back(next);
    engine.add(next);
    engine.run();
  }

  for (std::size_t i = z.size(); i-- > 0;) {
    std::vector<Index> trial;
    trial.reserve(z.size() - 1);
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i) trial.push_back(z[j]);
    }
    if (is_zfs(g, trial)) z = std::move(trial);
  }
  return z;
}

Instance random_instance(std::size_t n, std::size_t k, double density, ff::FieldSpec spec,
                         std::uint64_t seed) {
  if (k < 1 || k > n) throw std::invalid_argument("random_instance requires 1 <= k <= n");
  if (!(density >= 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random_instance density must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);

  std::vector<Index> perm(n);
  for (Index i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);

  // k - 1 distinct cut positions in 1..n-1 split perm into k nonempty chains.
  std::vector<std::size_t> cuts(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) cuts[i] = i + 1;
  std::shuffle(cuts.begin(), cuts.end(), rng);
  cuts.resize(k - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  std::vector<Index> z;
  std::vector<std::pair<Index, Index>> edges;
  std::size_t begin = 0;
  for (std::size_t end : cuts) {
    z.push_back(perm[begin]);
    for (std::size_t i = begin; i + 1 < end; ++i) edges.emplace_back(perm[i], perm[i + 1]);
    begin = end;
  }

  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : edges) present[u][v] = true;
  std::bernoulli_distribution propose(density);
  for (Index u = 0; u < n; ++u) {
    for (Index v = 0; v < n; ++v) {
      if (u == v || present[u][v] || !propose(rng)) continue;
      edges.emplace_back(u, v);
      if (is_zfs(PatternGraph(n, edges), z)) {
        present[u][v] = true;
      } else {
        edges.pop_back();
      }
    }
  }

  const std::uint32_t p = spec.modulus();
  std::uniform_int_distribution<std::uint32_t> nonzero(1, p - 1);
  std::uniform_int_distribution<std::uint32_t> any(0, p - 1);
  std::vector<la::Triplet> entries;
  entries.reserve(edges.size() + n);
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) entries.push_back({u, v, nonzero(rng)});
  for (Index v = 0; v < n; ++v) entries.push_back({v, v, any(rng)});
  return {la::SparseMatrix::from_triplets(spec, n, n, std::move(entries)), std::move(z)};
}

}  // namespace zfsolve::zf
