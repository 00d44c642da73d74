#include <algorithm>
#include <deque>
#include <stdexcept>

#include "triclub/solver.hpp"
#include "triclub/triangles.hpp"

namespace triclub {

namespace {

bool diameter_at_most_two(const Graph& g) {
  const auto n = g.num_vertices();
  VertexMarker marker(g.capacity());
  for (Vertex v : g.vertices())
    if (two_neighborhood_size(g, v, n, marker) < n) return false;
  return true;
}

/// Deletes edges in fewer than `ell` triangles until none is left.
void peel_edges(Graph& g, int ell) {
  if (ell <= 0) return;
  const auto limit = static_cast<std::size_t>(ell);
  std::deque<Edge> queue;
  for (const auto& e : g.edges())
    if (common_neighbors(g, e.u, e.w, limit) < limit) queue.push_back(e);
  while (!queue.empty()) {
    const Edge e = queue.front();
    queue.pop_front();
    if (!g.has_edge(e.u, e.w)) continue;
    if (common_neighbors(g, e.u, e.w, limit) >= limit) continue;
    std::vector<Vertex> common;
    for (Vertex x : g.neighbors(e.u))
      if (g.has_edge(x, e.w)) common.push_back(x);
    g.erase_edge(e.u, e.w);
    for (Vertex x : common) {
      queue.push_back(Edge::canonical(e.u, x));
      queue.push_back(Edge::canonical(e.w, x));
    }
  }
}

}  // namespace

Verification verify_solution(const Graph& g, std::span<const Vertex> subset, int ell, Variant variant) {
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::invalid_argument("verify_solution: repeated vertex");
  for (Vertex v : members)
    if (!g.contains(v)) throw std::invalid_argument("verify_solution: vertex not in graph");

  Verification out;
  if (members.empty()) {
    out.valid = true;
    return out;
  }
  if (members.size() == 1) {
    out.valid = ell == 0;
    return out;
  }

  auto sub = induced_subgraph(g, members);
  if (variant == Variant::vertex) {
    if (!diameter_at_most_two(sub.graph)) return out;
    const auto idx = TriangleIndex::build(sub.graph);
    for (Vertex v : sub.graph.vertices())
      if (idx.vertex_count(v) < ell) return out;
    out.valid = true;
    return out;
  }

  peel_edges(sub.graph, ell);
  if (!diameter_at_most_two(sub.graph)) return out;
  out.valid = true;
  for (const auto& e : sub.graph.edges()) out.witness_edges.push_back(Edge::canonical(sub.parent(e.u), sub.parent(e.w)));
  std::sort(out.witness_edges.begin(), out.witness_edges.end());
  return out;
}

}  // namespace triclub
