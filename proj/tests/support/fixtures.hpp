#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "triclub/generators.hpp"
#include "triclub/graph.hpp"
#include "triclub/oracle.hpp"
#include "triclub/workspace.hpp"

namespace fixtures {

using triclub::Edge;
using triclub::Graph;
using triclub::Vertex;

inline Graph make(Vertex n, std::vector<Edge> edges) { return Graph::from_edges(n, edges); }

/// Triangles {0,1,2} and {3,4,5} joined by the bridge 2-3.
inline Graph b6() { return make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3}}); }

/// Triangles {a,b,c} and {a,d,e} sharing a; a=0, b=1, c=2, d=3, e=4.
inline Graph bowtie() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}); }

inline Graph complete(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w) edges.push_back({u, w});
  return make(n, edges);
}

inline Graph cycle(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(Edge::canonical(v, (v + 1) % n));
  return make(n, edges);
}

/// Book with three pages on spine 0-1: triangles {0,1,2}, {0,1,3}, {0,1,4}.
inline Graph book3() { return make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {0, 4}, {1, 4}}); }

inline triclub::oracle::EdgeList to_oracle(const Graph& g) {
  triclub::oracle::EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.w);
  return out;
}

inline triclub::oracle::Kind to_oracle(triclub::Variant v) {
  return v == triclub::Variant::vertex ? triclub::oracle::Kind::vertex : triclub::oracle::Kind::edge;
}

/// Oracle optimum size of the whole graph (ids must be dense).
inline int oracle_opt(const Graph& g, int ell, triclub::Variant v) {
  return triclub::oracle::brute_force_opt(g.capacity(), to_oracle(g), ell, to_oracle(v)).size;
}

inline Graph random_graph(std::mt19937_64& rng, Vertex n_min, Vertex n_max, double p) {
  const Vertex n = std::uniform_int_distribution<Vertex>(n_min, n_max)(rng);
  return triclub::generators::erdos_renyi(n, p, rng());
}

}  // namespace fixtures
