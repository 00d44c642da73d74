#include "triclub/metrics.hpp"

#include <algorithm>

#include "triclub/triangles.hpp"

namespace triclub {

SetMetrics compute_metrics(const Graph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  const auto sub = induced_subgraph(g, members);
  const auto& h = sub.graph;

  SetMetrics out;
  out.vertices = h.num_vertices();
  out.edges = h.num_edges();
  if (out.vertices == 0) return out;
  out.density = out.vertices == 1 ? 1.0 : density(out.vertices, out.edges);

  const auto idx = TriangleIndex::build(h);
  out.triangles = static_cast<std::int64_t>(idx.num_triangles());
  double wedges = 0;
  out.min_local_cc = 1.0;
  for (Vertex v : h.vertices()) {
    const auto d = static_cast<double>(h.degree(v));
    const double pairs = d * (d - 1) / 2;
    wedges += pairs;
    if (pairs > 0) out.min_local_cc = std::min(out.min_local_cc, static_cast<double>(idx.vertex_count(v)) / pairs);
  }
  out.global_cc = wedges > 0 ? 3.0 * static_cast<double>(out.triangles) / wedges : 0.0;
  return out;
}

SetMetrics compute_metrics(const Graph& g) {
  const auto all = g.vertices();
  return compute_metrics(g, all);
}

}  // namespace triclub
