#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <absl/container/flat_hash_map.h>

namespace triclub {

/// Stable vertex identifier. Ids survive deletions and are never reused.
using Vertex = std::int32_t;

/// Undirected edge in canonical form (u < w).
struct Edge {
  Vertex u = 0;
  Vertex w = 0;

  static Edge canonical(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

inline std::uint64_t edge_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
         static_cast<std::uint32_t>(b);
}

/// Mutable undirected simple graph over the id range [0, capacity).
///
/// A vertex is present until erased; erased vertices keep their id and can be
/// restored. Neighbour lists are unordered vectors with O(1) swap-removal; a
/// hash map from directed pairs to list slots gives O(1) membership tests.
/// The raw erase/restore calls here do no triangle bookkeeping, see
/// delete_vertex()/delete_edge() in triangles.hpp for the tracked versions.
class Graph {
 public:
  Graph() = default;
  /// All `capacity` vertices present, no edges.
  explicit Graph(Vertex capacity);

  /// Builds a graph on [0, n); loops are dropped and duplicates merged.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex capacity() const { return static_cast<Vertex>(adj_.size()); }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return m_; }

  bool contains(Vertex v) const {
    return v >= 0 && v < capacity() && alive_[static_cast<std::size_t>(v)] != 0;
  }
  bool has_edge(Vertex u, Vertex w) const;
  std::size_t degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

  /// Present vertices in ascending id order.
  std::vector<Vertex> vertices() const;
  /// Present edges, canonical and sorted.
  std::vector<Edge> edges() const;

  /// Adds vertex slots up to `capacity`; new slots are present and isolated.
  void grow(Vertex capacity);
  /// Returns false for loops, absent endpoints, or an existing edge.
  bool add_edge(Vertex u, Vertex w);

  bool erase_edge(Vertex u, Vertex w);
  /// Removes v and its incident edges; returns the former neighbours.
  std::vector<Vertex> erase_vertex(Vertex v);
  /// Re-inserts an erased vertex with the given (present) neighbours.
  void restore_vertex(Vertex v, std::span<const Vertex> neighbors);

  /// Same vertex set and same edge set.
  bool operator==(const Graph& other) const;

 private:
  static std::uint64_t slot_key(Vertex from, Vertex to) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(from)) << 32) |
           static_cast<std::uint32_t>(to);
  }
  void link(Vertex from, Vertex to);
  void unlink(Vertex from, Vertex to);

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> alive_;
  absl::flat_hash_map<std::uint64_t, std::uint32_t> slot_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
};

/// Reusable "visited" set over vertex ids, cleared in O(1) by bumping a stamp.
class VertexMarker {
 public:
  explicit VertexMarker(Vertex capacity = 0) : stamp_(static_cast<std::size_t>(capacity), 0) {}

  void reset(Vertex capacity) {
    if (static_cast<std::size_t>(capacity) > stamp_.size()) stamp_.resize(static_cast<std::size_t>(capacity), 0);
    if (++current_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      current_ = 1;
    }
  }
  bool marked(Vertex v) const { return stamp_[static_cast<std::size_t>(v)] == current_; }
  /// Returns true if v was not marked before.
  bool mark(Vertex v) {
    auto& s = stamp_[static_cast<std::size_t>(v)];
    if (s == current_) return false;
    s = current_;
    return true;
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t current_ = 0;
};

struct DegeneracyOrdering {
  std::vector<Vertex> order;
  /// position[v] = index of v in `order`, -1 for absent ids.
  std::vector<std::int32_t> position;
  std::size_t degeneracy = 0;
  /// forward[v] = neighbours of v that appear later in `order`.
  std::vector<std::vector<Vertex>> forward;
};

/// Matula–Beck smallest-last ordering in O(n + m).
DegeneracyOrdering degeneracy_ordering(const Graph& g);

/// N_2[v]: v, its neighbours, and every vertex sharing a neighbour with v. Sorted.
std::vector<Vertex> two_neighborhood(const Graph& g, Vertex v);

/// |N_2[v]|, counting stops once `cap` is exceeded (returns cap + 1 then).
std::size_t two_neighborhood_size(const Graph& g, Vertex v, std::size_t cap, VertexMarker& marker);

/// dist(u, w) <= 2.
bool compatible(const Graph& g, Vertex u, Vertex w);

/// Number of common neighbours, stopping at `limit`.
std::size_t common_neighbors(const Graph& g, Vertex u, Vertex w, std::size_t limit = SIZE_MAX);

/// G[S] relabelled onto [0, |S|) in ascending order of the parent ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;

  Vertex parent(Vertex local) const { return to_parent[static_cast<std::size_t>(local)]; }
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// m / C(n, 2); 0 for n < 2.
double density(std::size_t n, std::size_t m);

}  // namespace triclub
