#include "triclub/bounds.hpp"

#include <algorithm>
#include <limits>

#include "triclub/rules.hpp"

namespace triclub::bounds {

bool BoundResult::offer(std::vector<Vertex> candidate, std::vector<Edge> edges) {
  if (static_cast<int>(candidate.size()) <= value) return false;
  std::sort(candidate.begin(), candidate.end());
  std::sort(edges.begin(), edges.end());
  value = static_cast<int>(candidate.size());
  witness = std::move(candidate);
  witness_edges = std::move(edges);
  return true;
}

namespace {

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Vertex local_id(const Subgraph& sub, Vertex parent) {
  auto it = std::lower_bound(sub.to_parent.begin(), sub.to_parent.end(), parent);
  return static_cast<Vertex>(it - sub.to_parent.begin());
}

/// Live vertices (and, for the edge variant, live edges) mapped back to parent ids.
std::pair<std::vector<Vertex>, std::vector<Edge>> lift(const Workspace& ws, const Subgraph& sub) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (Vertex v : ws.graph().vertices()) vertices.push_back(sub.parent(v));
  if (ws.variant() == Variant::edge)
    for (const auto& e : ws.graph().edges()) edges.push_back(Edge::canonical(sub.parent(e.u), sub.parent(e.w)));
  return {std::move(vertices), std::move(edges)};
}

/// Sorted by |N_2[v]| descending, then id ascending.
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
  for (const auto& [size, v] : keyed) out.push_back(v);
  return out;
}

/// Vertex to delete from a conflicting pair: never the root; otherwise the
/// one in fewer triangles (vertex variant) or of smaller degree (edge
/// variant), the larger id on ties.
Vertex greedy_victim(const Workspace& ws, Vertex root, Vertex a, Vertex b) {
  if (a == root) return b;
  if (b == root) return a;
  auto key = [&](Vertex x) -> std::int64_t {
    return ws.variant() == Variant::vertex ? ws.triangles().vertex_count(x)
                                           : static_cast<std::int64_t>(ws.graph().degree(x));
  };
  const auto ka = key(a), kb = key(b);
  if (ka != kb) return ka < kb ? a : b;
  return std::max(a, b);
}

}  // namespace

BoundResult neighborhood_solution(const Graph& g, Vertex v, int ell, Variant variant) {
  BoundResult out;
  if (!g.contains(v)) return out;
  const auto sub = induced_subgraph(g, closed_neighborhood(g, v));
  Workspace ws(sub.graph, variant, ell, false);
  rules::ltr(ws);
  if (!ws.graph().contains(local_id(sub, v))) return out;
  auto [vertices, edges] = lift(ws, sub);
  out.offer(std::move(vertices), std::move(edges));
  return out;
}

BoundResult neighborhood_lower_bound(const Graph& g, int ell, Variant variant, const Deadline& deadline) {
  BoundResult best;
  for (Vertex v = 0; v < g.capacity(); ++v) {
    if (!g.contains(v)) continue;
    if (static_cast<int>(g.degree(v)) + 1 <= best.value) continue;
    if (deadline.expired()) break;
    auto found = neighborhood_solution(g, v, ell, variant);
    best.per_root.emplace_back(v, found.value);
    best.offer(std::move(found.witness), std::move(found.witness_edges));
  }
  return best;
}

BoundResult greedy_lower_bound(const Graph& g, int ell, Variant variant, int seed_k, const Deadline& deadline) {
  BoundResult best;
  VertexMarker marker(g.capacity());
  for (Vertex v : roots_by_two_neighborhood(g)) {
    if (deadline.expired()) break;
    const auto threshold = static_cast<std::size_t>(std::max(seed_k, best.value));
    if (two_neighborhood_size(g, v, threshold, marker) <= threshold) continue;

    const auto sub = induced_subgraph(g, two_neighborhood(g, v));
    const Vertex root = local_id(sub, v);
    Workspace ws(sub.graph, variant, ell, false);
    rules::ldr(ws);
    rules::ltr(ws);
    if (!ws.graph().contains(root)) {
      best.per_root.emplace_back(v, 0);
      continue;
    }
    ws.build_conflict_graph();
    while (ws.graph().contains(root)) {
      const auto pair = ws.conflicts()->first_conflict();
      if (!pair) break;
      ws.remove_vertex(greedy_victim(ws, root, pair->u, pair->w));
      rules::ltr(ws);
    }
    if (!ws.graph().contains(root)) {
      best.per_root.emplace_back(v, 0);
      continue;
    }
    auto [vertices, edges] = lift(ws, sub);
    best.per_root.emplace_back(v, static_cast<int>(vertices.size()));
    best.offer(std::move(vertices), std::move(edges));
  }
  return best;
}

std::size_t reduce_with_bound(Workspace& global, int k) {
  global.context().k = k;
  std::size_t deleted = 0;
  for (;;) {
    auto a = rules::two_nr(global);
    auto b = rules::basic_rules(global);
    const auto step = a.deleted_vertices.size() + b.deleted_vertices.size();
    deleted += step;
    if (step == 0 && b.deleted_edges.empty()) return deleted;
  }
}

void greedy_stage(Workspace& global, BoundResult& best, const Deadline& deadline) {
  VertexMarker marker(global.graph().capacity());
  for (Vertex v : roots_by_two_neighborhood(global.graph())) {
    if (deadline.expired()) break;
    const auto& g = global.graph();
    if (!g.contains(v)) continue;
    const auto k = static_cast<std::size_t>(best.value);
    if (two_neighborhood_size(g, v, k, marker) <= k) {
      global.remove_vertex(v);
      continue;
    }

    const auto sub = induced_subgraph(g, two_neighborhood(g, v));
    const Vertex root = local_id(sub, v);
    Workspace ws(sub.graph, global.variant(), global.ell(), false);
    ws.context().k = best.value;
    ws.set_root(root);

    // Reduction-only phase: if it leaves at most k vertices, no solution
    // larger than k contains v.
    bool hopeless = rules::ldr(ws).infeasible;
    if (!hopeless) {
      ws.build_conflict_graph();
      hopeless = rules::establish_triangle_property(ws).infeasible ||
                 static_cast<int>(ws.num_vertices()) <= best.value;
    }
    if (hopeless) {
      best.per_root.emplace_back(v, 0);
      global.remove_vertex(v);
      continue;
    }

    // Greedy phase: resolve a maximal matching of conflicts, re-establish, repeat.
    bool aborted = false;
    while (!ws.conflicts()->empty()) {
      for (const auto& e : greedy_maximal_matching(*ws.conflicts())) {
        if (ws.graph().contains(e.u) && ws.graph().contains(e.w)) ws.remove_vertex(greedy_victim(ws, root, e.u, e.w));
      }
      if (rules::establish_triangle_property(ws).infeasible || !ws.graph().contains(root)) {
        aborted = true;
        break;
      }
    }
    if (aborted) {
      best.per_root.emplace_back(v, 0);
      continue;
    }
    auto [vertices, edges] = lift(ws, sub);
    best.per_root.emplace_back(v, static_cast<int>(vertices.size()));
    best.offer(std::move(vertices), std::move(edges));
  }
}

BoundResult multi_lb(const Graph& g, int ell, Variant variant, const Deadline& deadline, int* nlb_value) {
  Workspace global(g, variant, ell, false);
  rules::basic_rules(global);
  auto best = neighborhood_lower_bound(global.graph(), ell, variant, deadline);
  if (nlb_value) *nlb_value = best.value;
  best.per_root.clear();
  reduce_with_bound(global, best.value);
  greedy_stage(global, best, deadline);
  reduce_with_bound(global, best.value);
  return best;
}

}  // namespace triclub::bounds
