#include "triclub/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "triclub/bounds.hpp"

namespace triclub {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::basic: return "basic";
    case Algorithm::basic_ub: return "basic-ub";
    case Algorithm::nlb: return "nlb";
    case Algorithm::multi_lb: return "multi-lb";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "basic") return Algorithm::basic;
  if (text == "basic-ub" || text == "basic+ub") return Algorithm::basic_ub;
  if (text == "nlb" || text == "n-lb") return Algorithm::nlb;
  if (text == "multi-lb" || text == "multilb") return Algorithm::multi_lb;
  throw std::invalid_argument("unknown algorithm: " + std::string(text));
}

std::optional<Vertex> select_branching_vertex(const ConflictGraph& gc, std::span<const Vertex> marked) {
  std::optional<Vertex> best;
  std::size_t best_degree = 0;
  for (Vertex v = 0; v < gc.capacity(); ++v) {
    if (!gc.contains(v) || std::find(marked.begin(), marked.end(), v) != marked.end()) continue;
    const auto d = gc.degree(v);
    if (d > best_degree) {
      best_degree = d;
      best = v;
    }
  }
  return best;
}

namespace {

/// Conflict degrees computed from the graph, for searches without a conflict graph.
std::optional<Vertex> select_branching_vertex_direct(const Workspace& ws) {
  const auto& g = ws.graph();
  VertexMarker marker(g.capacity());
  std::optional<Vertex> best;
  std::size_t best_degree = 0;
  const auto n = g.num_vertices();
  for (Vertex v = 0; v < g.capacity(); ++v) {
    if (!g.contains(v) || ws.is_marked(v)) continue;
    const auto d = n - two_neighborhood_size(g, v, n, marker);
    if (d > best_degree) {
      best_degree = d;
      best = v;
    }
  }
  return best;
}

bool has_conflict_direct(const Graph& g) {
  VertexMarker marker(g.capacity());
  const auto n = g.num_vertices();
  for (Vertex v = 0; v < g.capacity(); ++v)
    if (g.contains(v) && two_neighborhood_size(g, v, n, marker) < n) return true;
  return false;
}

struct Search {
  Workspace& ws;
  const BranchOptions& opts;
  rules::RuleCounters* counters;
  BranchResult result;

  void run(bool at_root) {
    if (opts.deadline.expired()) {
      result.timed_out = true;
      return;
    }
    ++result.nodes;
    const auto state = ws.checkpoint();
    auto which = opts.node_rules;
    if (opts.matching_at_root_only && !at_root) which.use_matching = false;
    const auto outcome = rules::apply_node_rules(ws, which, counters);

    auto& k = ws.context().k;
    if (!outcome.infeasible && static_cast<int>(ws.num_vertices()) > k) {
      const auto* gc = ws.conflicts();
      const bool conflicts = gc ? !gc->empty() : has_conflict_direct(ws.graph());
      if (!conflicts) {
        k = static_cast<int>(ws.num_vertices());
        result.best = ws.graph().vertices();
        result.witness_edges.clear();
        if (ws.variant() == Variant::edge) result.witness_edges = ws.graph().edges();
      } else {
        const auto u = gc ? select_branching_vertex(*gc, ws.marked()) : select_branching_vertex_direct(ws);
        if (u) {
          const auto before = ws.checkpoint();
          ws.remove_vertex(*u);
          run(false);
          ws.rollback(before);
          if (!result.timed_out && ws.graph().contains(*u) && static_cast<int>(ws.num_vertices()) > k) {
            ws.mark(*u);
            run(false);
            ws.rollback(before);
          }
        }
      }
    }
    ws.rollback(state);
  }
};

}  // namespace

BranchResult marked_branching(Workspace& ws, const BranchOptions& opts, rules::RuleCounters* counters) {
  if (!ws.context().root) throw std::invalid_argument("marked_branching needs a root");
  if (opts.node_rules.use_conflict_graph && !ws.conflicts())
    throw std::invalid_argument("marked_branching: conflict graph requested but not built");
  Search search{ws, opts, counters, {}};
  search.run(true);
  return std::move(search.result);
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void add_counters(rules::RuleCounters& into, const rules::RuleCounters& from) {
  into.ldr += from.ldr;
  into.ltr += from.ltr;
  into.lcr += from.lcr;
  into.two_nr += from.two_nr;
  into.irr += from.irr;
  into.mir += from.mir;
  into.cr += from.cr;
  into.ncr += from.ncr;
  into.matching += from.matching;
}

std::vector<Vertex> roots_by_two_neighborhood(const Graph& g) {
  std::vector<std::pair<std::size_t, Vertex>> keyed;
  VertexMarker marker(g.capacity());
  for (Vertex v : g.vertices())
    keyed.emplace_back(two_neighborhood_size(g, v, std::numeric_limits<std::size_t>::max() - 1, marker), v);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  std::vector<Vertex> out;
  out.reserve(keyed.size());
  for (const auto& entry : keyed) out.push_back(entry.second);
  return out;
}

/// Shared state of the decomposition over roots.
class RootScheduler {
 public:
  RootScheduler(Workspace& global, const SolverConfig& cfg, bounds::BoundResult& best, const Deadline& deadline)
      : global_(global), cfg_(cfg), best_(best), deadline_(deadline), shared_k_(best.value),
        roots_(roots_by_two_neighborhood(global.graph())) {}

  void run() {
    const int workers = std::max(1, cfg_.workers);
    if (workers == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int i = 0; i < workers; ++i) pool.emplace_back([this] { work(); });
      for (auto& t : pool) t.join();
    }
  }

  bool timed_out() const { return timed_out_; }
  std::int64_t nodes() const { return nodes_; }
  std::int64_t roots_branched() const { return roots_branched_; }
  const rules::RuleCounters& counters() const { return counters_; }

 private:
  struct LocalJob {
    Vertex root;
    Subgraph sub;
    int k;
  };

  /// Next root whose local instance may still beat k; roots that cannot are
  /// deleted on the way.
  std::optional<LocalJob> next_job() {
    std::lock_guard lock(mutex_);
    VertexMarker marker(global_.graph().capacity());
    while (next_ < roots_.size()) {
      if (deadline_.expired()) {
        timed_out_ = true;
        return std::nullopt;
      }
      const Vertex v = roots_[next_++];
      const auto& g = global_.graph();
      if (!g.contains(v)) continue;
      const int k = shared_k_.load();
      const auto cap = static_cast<std::size_t>(std::max(k, 0));
      if (two_neighborhood_size(g, v, cap, marker) <= cap) {
        retire(v);
        continue;
      }
      return LocalJob{v, induced_subgraph(g, two_neighborhood(g, v)), k};
    }
    return std::nullopt;
  }

  void retire(Vertex v) {
    global_.remove_vertex(v);
    global_.context().k = shared_k_.load();
    rules::basic_rules(global_);
  }

  void work() {
    while (auto job = next_job()) {
      auto local = solve_local(*job);
      std::lock_guard lock(mutex_);
      if (local.timed_out) timed_out_ = true;
      nodes_ += local.nodes;
      add_counters(counters_, local.counters);
      if (local.branched) ++roots_branched_;
      if (local.best && static_cast<int>(local.best->size()) > best_.value) {
        best_.offer(std::move(*local.best), std::move(local.witness_edges));
        shared_k_.store(best_.value);
      }
      if (!local.timed_out) retire(job->root);
    }
  }

  struct LocalResult {
    std::optional<std::vector<Vertex>> best;
    std::vector<Edge> witness_edges;
    std::int64_t nodes = 0;
    rules::RuleCounters counters;
    bool timed_out = false;
    bool branched = false;
  };

  LocalResult solve_local(const LocalJob& job) {
    LocalResult out;
    const auto& sub = job.sub;
    const Vertex root = static_cast<Vertex>(
        std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), job.root) - sub.to_parent.begin());
    const bool with_conflicts = cfg_.algorithm != Algorithm::basic;
    const double local_density = density(sub.graph.num_vertices(), sub.graph.num_edges());

    Workspace ws(sub.graph, global_.variant(), global_.ell());
    ws.context().k = std::max(job.k, shared_k_.load());
    ws.set_root(root);
    if (rules::basic_rules(ws).infeasible || static_cast<int>(ws.num_vertices()) <= ws.context().k) return out;
    if (with_conflicts) ws.build_conflict_graph();

    BranchOptions opts;
    opts.node_rules.use_conflict_graph = with_conflicts;
    opts.node_rules.use_lcr = with_conflicts && local_density > cfg_.density_threshold;
    opts.node_rules.use_matching = with_conflicts;
    opts.node_rules.exact_matching = cfg_.exact_matching;
    opts.matching_at_root_only = cfg_.matching_at_root_only;
    opts.deadline = deadline_;

    out.branched = true;
    auto result = marked_branching(ws, opts, &out.counters);
    out.nodes = result.nodes;
    out.timed_out = result.timed_out;
    if (result.best) {
      std::vector<Vertex> lifted;
      lifted.reserve(result.best->size());
      for (Vertex v : *result.best) lifted.push_back(sub.parent(v));
      out.best = std::move(lifted);
      for (const auto& e : result.witness_edges)
        out.witness_edges.push_back(Edge::canonical(sub.parent(e.u), sub.parent(e.w)));
    }
    return out;
  }

  Workspace& global_;
  const SolverConfig& cfg_;
  bounds::BoundResult& best_;
  const Deadline& deadline_;
  std::atomic<int> shared_k_;
  std::vector<Vertex> roots_;
  std::size_t next_ = 0;
  std::mutex mutex_;
  bool timed_out_ = false;
  std::int64_t nodes_ = 0;
  std::int64_t roots_branched_ = 0;
  rules::RuleCounters counters_;
};

}  // namespace

Solution solve(const Instance& inst, const SolverConfig& cfg) {
  if (inst.ell < 0) throw std::invalid_argument("ell must be non-negative");
  if (!(cfg.density_threshold >= 0.0 && cfg.density_threshold <= 1.0))
    throw std::invalid_argument("density_threshold must lie in [0, 1]");
  if (cfg.workers < 1) throw std::invalid_argument("workers must be at least 1");
  if (cfg.time_limit && *cfg.time_limit < 0) throw std::invalid_argument("time_limit must be non-negative");

  const auto start = Clock::now();
  const auto deadline = Deadline::after(cfg.time_limit);
  Solution sol;

  Workspace global(inst.graph, inst.variant, inst.ell, false);
  rules::basic_rules(global);

  bounds::BoundResult best;
  if (cfg.algorithm == Algorithm::nlb || cfg.algorithm == Algorithm::multi_lb) {
    best = bounds::neighborhood_lower_bound(global.graph(), inst.ell, inst.variant, deadline);
    sol.stats.nlb_value = best.value;
    best.per_root.clear();
    bounds::reduce_with_bound(global, best.value);
    if (cfg.algorithm == Algorithm::multi_lb) {
      bounds::greedy_stage(global, best, deadline);
      best.per_root.clear();
      sol.stats.multilb_value = best.value;
      bounds::reduce_with_bound(global, best.value);
    }
  }
  sol.stats.kernel_vertices = global.num_vertices();
  sol.stats.preprocessing_seconds = seconds_since(start);

  bool timed_out = deadline.expired();
  if (!timed_out) {
    RootScheduler scheduler(global, cfg, best, deadline);
    scheduler.run();
    timed_out = scheduler.timed_out();
    sol.stats.nodes = scheduler.nodes();
    sol.stats.roots_branched = scheduler.roots_branched();
    sol.stats.rule_firings = scheduler.counters();
  }

  sol.vertices = std::move(best.witness);
  std::sort(sol.vertices.begin(), sol.vertices.end());
  if (inst.variant == Variant::edge) {
    sol.witness_edges = std::move(best.witness_edges);
    std::sort(sol.witness_edges.begin(), sol.witness_edges.end());
  }
  sol.proven_optimal = !timed_out;
  sol.stats.wall_seconds = seconds_since(start);
  return sol;
}

}  // namespace triclub
