#pragma once

#include <cstdint>
#include <span>

#include "triclub/graph.hpp"

namespace triclub {

/// Cohesion measures of an induced subgraph G[S].
struct SetMetrics {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  /// |E(G[S])| / C(|S|, 2); 1 for a singleton, 0 for the empty set.
  double density = 0;
  /// 3 * triangles / wedges; 0 without wedges.
  double global_cc = 0;
  /// Smallest local clustering coefficient; vertices of degree < 2 count as 1.
  /// 0 for the empty set.
  double min_local_cc = 0;
  std::int64_t triangles = 0;
};

/// Throws std::invalid_argument if S contains a vertex not in g.
SetMetrics compute_metrics(const Graph& g, std::span<const Vertex> subset);

/// Metrics of the whole graph.
SetMetrics compute_metrics(const Graph& g);

}  // namespace triclub
