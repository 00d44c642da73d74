#pragma once

#include <cstdint>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "triclub/graph.hpp"

namespace triclub {

struct Triangle {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;

  bool contains(Vertex v) const { return a == v || b == v || c == v; }
  auto operator<=>(const Triangle&) const = default;
};

/// Live triangle counters for a Graph.
///
/// Every triangle of the graph at build time gets an id; a triangle dies when
/// one of its vertices or edges is deleted and is revived on undo. Per-vertex
/// lists hold triangle ids (dead ones are skipped lazily). Per-edge lists are
/// not stored; they are common-neighbour intersections.
class TriangleIndex {
 public:
  TriangleIndex() = default;

  /// Chiba–Nishizeki style enumeration over a degeneracy ordering, O(m * d).
  static TriangleIndex build(const Graph& g);

  std::int64_t vertex_count(Vertex v) const { return vertex_count_[static_cast<std::size_t>(v)]; }
  /// |N(u) ∩ N(w)| for a present edge uw, 0 for a non-edge.
  std::int32_t edge_count(Vertex u, Vertex w) const {
    auto it = edge_count_.find(edge_key(u, w));
    return it == edge_count_.end() ? 0 : it->second;
  }
  std::size_t num_triangles() const { return alive_count_; }

  /// Alive triangles, each with a < b < c, sorted.
  std::vector<Triangle> triangles() const;
  std::vector<Triangle> triangles_of(Vertex v) const;

  bool operator==(const TriangleIndex& other) const;

 private:
  friend struct TriangleMutator;

  void kill(std::uint32_t t);
  void revive(std::uint32_t t);

  std::vector<Triangle> tris_;
  std::vector<char> tri_alive_;
  std::vector<std::vector<std::uint32_t>> by_vertex_;
  std::vector<std::int64_t> vertex_count_;
  absl::flat_hash_map<std::uint64_t, std::int32_t> edge_count_;
  std::size_t alive_count_ = 0;
};

}  // namespace triclub
