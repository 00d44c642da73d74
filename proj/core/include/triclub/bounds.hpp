#pragma once

#include <utility>
#include <vector>

#include "triclub/deadline.hpp"
#include "triclub/graph.hpp"
#include "triclub/workspace.hpp"

namespace triclub::bounds {

/// A feasible triangle 2-club found by a heuristic.
struct BoundResult {
  int value = 0;
  /// Sorted vertex ids of the witness.
  std::vector<Vertex> witness;
  /// Edge variant only: witness edges of the spanning subgraph.
  std::vector<Edge> witness_edges;
  /// (root, size of the set found for it) for every root that was evaluated.
  std::vector<std::pair<Vertex, int>> per_root;

  /// Replaces the witness if `candidate` is strictly larger.
  bool offer(std::vector<Vertex> candidate, std::vector<Edge> edges);
};

/// The peel of G[N[v]] that keeps v, or empty if the peel deletes v.
/// Vertex ids are those of `g`.
BoundResult neighborhood_solution(const Graph& g, Vertex v, int ell, Variant variant);

/// N-LB: the best neighborhood_solution() over all roots in ascending id order.
/// Roots with |N[v]| <= best so far are skipped.
BoundResult neighborhood_lower_bound(const Graph& g, int ell, Variant variant, const Deadline& deadline = {});

/// G-LB: per root in descending |N_2[v]| order (skipping roots with
/// |N_2[v]| <= max(seed_k, best)), peel G[N_2[v]] and greedily delete one
/// endpoint of the first conflict pair until the set is a 2-club.
BoundResult greedy_lower_bound(const Graph& g, int ell, Variant variant, int seed_k, const Deadline& deadline = {});

/// 2-NR and the basic rules on the whole graph until nothing changes,
/// with k = `k`. Returns the number of deleted vertices.
std::size_t reduce_with_bound(Workspace& global, int k);

/// The greedy stage of Multi-LB run in place: roots whose local instance
/// cannot beat best.value are deleted from `global`; improvements are
/// offered to `best`.
void greedy_stage(Workspace& global, BoundResult& best, const Deadline& deadline = {});

/// Multi-LB: N-LB, bound-driven reduction, greedy stage, reduction again.
/// `nlb_value`, if given, receives the N-LB value computed on the way.
BoundResult multi_lb(const Graph& g, int ell, Variant variant, const Deadline& deadline = {}, int* nlb_value = nullptr);

}  // namespace triclub::bounds
