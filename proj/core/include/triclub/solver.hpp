#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "triclub/deadline.hpp"
#include "triclub/graph.hpp"
#include "triclub/rules.hpp"
#include "triclub/workspace.hpp"

namespace triclub {

/// The four algorithm configurations, from fewest to most pruning devices.
enum class Algorithm {
  basic,     ///< basic and marking rules, 2-NR; no conflict graph, no lower bound
  basic_ub,  ///< + conflict graph, LCR, Matching Rule
  nlb,       ///< + neighbourhood lower bound
  multi_lb,  ///< + greedy lower bound stage
};

std::string_view to_string(Algorithm a);
/// Accepts basic, basic-ub, nlb, multi-lb. Throws std::invalid_argument otherwise.
Algorithm parse_algorithm(std::string_view text);

struct Instance {
  Graph graph;
  int ell = 1;
  Variant variant = Variant::vertex;
};

struct SolverConfig {
  Algorithm algorithm = Algorithm::nlb;
  /// Local instances with density at most this use 2-NR, denser ones LCR.
  double density_threshold = 0.05;
  std::optional<double> time_limit;
  bool exact_matching = false;
  /// Apply the Matching Rule only at the root node of each local search.
  bool matching_at_root_only = false;
  int workers = 1;
};

struct SolverStats {
  std::int64_t nodes = 0;
  std::int64_t roots_branched = 0;
  rules::RuleCounters rule_firings;
  double wall_seconds = 0;
  double preprocessing_seconds = 0;
  std::optional<int> nlb_value;
  std::optional<int> multilb_value;
  std::size_t kernel_vertices = 0;

  double preprocessing_fraction() const { return wall_seconds > 0 ? preprocessing_seconds / wall_seconds : 0.0; }
};

struct Solution {
  /// Sorted vertex ids of the input graph.
  std::vector<Vertex> vertices;
  /// Edge variant: the spanning witness subgraph.
  std::vector<Edge> witness_edges;
  bool proven_optimal = false;
  SolverStats stats;

  std::size_t size() const { return vertices.size(); }
};

/// Exact solver: reduce, bound, then branch on every remaining 2-neighbourhood.
/// Throws std::invalid_argument on a bad configuration.
Solution solve(const Instance& inst, const SolverConfig& cfg);

/// Unmarked vertex of maximum conflict degree, smallest id on ties; nullopt if
/// no unmarked vertex has a conflict.
std::optional<Vertex> select_branching_vertex(const ConflictGraph& gc, std::span<const Vertex> marked);

struct BranchOptions {
  rules::NodeRules node_rules;
  bool matching_at_root_only = false;
  Deadline deadline;
};

struct BranchResult {
  /// Best set found with more than k vertices, in the workspace's ids;
  /// nullopt when no such set exists (or the search was cut short).
  std::optional<std::vector<Vertex>> best;
  std::vector<Edge> witness_edges;
  std::int64_t nodes = 0;
  bool timed_out = false;
};

/// Exhaustive marked branching on a local instance. The workspace must have
/// its root set; it needs a conflict graph iff node_rules.use_conflict_graph.
/// `ws.context().k` is raised whenever a larger solution is found. The
/// workspace is returned in the state it was passed in.
BranchResult marked_branching(Workspace& ws, const BranchOptions& opts, rules::RuleCounters* counters = nullptr);

/// Outcome of checking one vertex set.
struct Verification {
  bool valid = false;
  /// Edge variant: the maximal witness (the triangle peel of G[S]).
  std::vector<Edge> witness_edges;
};

/// Checks that S is a triangle 2-club of the given variant. Throws
/// std::invalid_argument if S is not a subset of the vertex set.
Verification verify_solution(const Graph& g, std::span<const Vertex> subset, int ell, Variant variant);

}  // namespace triclub
