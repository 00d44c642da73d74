#include "triclub/triangles.hpp"

#include <algorithm>
#include <array>

namespace triclub {

namespace {

Triangle sorted_triangle(Vertex a, Vertex b, Vertex c) {
  std::array<Vertex, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return {t[0], t[1], t[2]};
}

}  // namespace

TriangleIndex TriangleIndex::build(const Graph& g) {
  TriangleIndex idx;
  const auto cap = static_cast<std::size_t>(g.capacity());
  idx.by_vertex_.assign(cap, {});
  idx.vertex_count_.assign(cap, 0);
  idx.edge_count_.reserve(g.num_edges());
  for (Vertex u = 0; u < g.capacity(); ++u)
    for (Vertex w : g.neighbors(u))
      if (u < w) idx.edge_count_.emplace(edge_key(u, w), 0);

  const auto order = degeneracy_ordering(g);
  VertexMarker later(g.capacity());
  for (Vertex v : order.order) {
    const auto& fv = order.forward[static_cast<std::size_t>(v)];
    if (fv.size() < 2) continue;
    later.reset(g.capacity());
    for (Vertex u : fv) later.mark(u);
    for (Vertex u : fv) {
      for (Vertex w : order.forward[static_cast<std::size_t>(u)]) {
        if (!later.marked(w)) continue;
        idx.tris_.push_back(sorted_triangle(v, u, w));
      }
    }
  }
  std::sort(idx.tris_.begin(), idx.tris_.end());

  idx.tri_alive_.assign(idx.tris_.size(), 1);
  idx.alive_count_ = idx.tris_.size();
  for (std::uint32_t t = 0; t < idx.tris_.size(); ++t) {
    const auto& tri = idx.tris_[t];
    for (Vertex x : {tri.a, tri.b, tri.c}) {
      idx.by_vertex_[static_cast<std::size_t>(x)].push_back(t);
      ++idx.vertex_count_[static_cast<std::size_t>(x)];
    }
    ++idx.edge_count_[edge_key(tri.a, tri.b)];
    ++idx.edge_count_[edge_key(tri.a, tri.c)];
    ++idx.edge_count_[edge_key(tri.b, tri.c)];
  }
  return idx;
}

void TriangleIndex::kill(std::uint32_t t) {
  tri_alive_[t] = 0;
  --alive_count_;
  const auto& tri = tris_[t];
  --vertex_count_[static_cast<std::size_t>(tri.a)];
  --vertex_count_[static_cast<std::size_t>(tri.b)];
  --vertex_count_[static_cast<std::size_t>(tri.c)];
  --edge_count_[edge_key(tri.a, tri.b)];
  --edge_count_[edge_key(tri.a, tri.c)];
  --edge_count_[edge_key(tri.b, tri.c)];
}

void TriangleIndex::revive(std::uint32_t t) {
  tri_alive_[t] = 1;
  ++alive_count_;
  const auto& tri = tris_[t];
  ++vertex_count_[static_cast<std::size_t>(tri.a)];
  ++vertex_count_[static_cast<std::size_t>(tri.b)];
  ++vertex_count_[static_cast<std::size_t>(tri.c)];
  ++edge_count_[edge_key(tri.a, tri.b)];
  ++edge_count_[edge_key(tri.a, tri.c)];
  ++edge_count_[edge_key(tri.b, tri.c)];
}

std::vector<Triangle> TriangleIndex::triangles() const {
  std::vector<Triangle> out;
  out.reserve(alive_count_);
  for (std::size_t t = 0; t < tris_.size(); ++t)
    if (tri_alive_[t]) out.push_back(tris_[t]);
  return out;
}

std::vector<Triangle> TriangleIndex::triangles_of(Vertex v) const {
  std::vector<Triangle> out;
  if (v < 0 || static_cast<std::size_t>(v) >= by_vertex_.size()) return out;
  for (auto t : by_vertex_[static_cast<std::size_t>(v)])
    if (tri_alive_[t]) out.push_back(tris_[t]);
  return out;
}

bool TriangleIndex::operator==(const TriangleIndex& other) const {
  if (alive_count_ != other.alive_count_) return false;
  if (triangles() != other.triangles()) return false;
  const auto cap = std::max(vertex_count_.size(), other.vertex_count_.size());
  for (std::size_t v = 0; v < cap; ++v) {
    const auto a = v < vertex_count_.size() ? vertex_count_[v] : 0;
    const auto b = v < other.vertex_count_.size() ? other.vertex_count_[v] : 0;
    if (a != b) return false;
  }
  auto nonzero = [](const absl::flat_hash_map<std::uint64_t, std::int32_t>& m, const auto& ref) {
    for (const auto& [key, count] : m) {
      auto it = ref.find(key);
      if (count != (it == ref.end() ? 0 : it->second)) return false;
    }
    return true;
  };
  return nonzero(edge_count_, other.edge_count_) && nonzero(other.edge_count_, edge_count_);
}

}  // namespace triclub
