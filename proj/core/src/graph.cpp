#include "triclub/graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace triclub {

Graph::Graph(Vertex capacity) { grow(capacity); }

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  Graph g(n);
  g.slot_.reserve(edges.size() * 2);
  for (const auto& e : edges) g.add_edge(e.u, e.w);
  return g;
}

void Graph::grow(Vertex capacity) {
  if (capacity <= this->capacity()) return;
  const auto old = adj_.size();
  adj_.resize(static_cast<std::size_t>(capacity));
  alive_.resize(static_cast<std::size_t>(capacity), 1);
  n_ += adj_.size() - old;
}

bool Graph::has_edge(Vertex u, Vertex w) const {
  if (!contains(u) || !contains(w)) return false;
  // Scanning a short list beats hashing.
  if (degree(u) <= 8) {
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::find(a.begin(), a.end(), w) != a.end();
  }
  return slot_.contains(slot_key(u, w));
}

void Graph::link(Vertex from, Vertex to) {
  auto& list = adj_[static_cast<std::size_t>(from)];
  slot_[slot_key(from, to)] = static_cast<std::uint32_t>(list.size());
  list.push_back(to);
}

void Graph::unlink(Vertex from, Vertex to) {
  auto& list = adj_[static_cast<std::size_t>(from)];
  auto it = slot_.find(slot_key(from, to));
  assert(it != slot_.end());
  const auto pos = it->second;
  slot_.erase(it);
  const Vertex last = list.back();
  list.pop_back();
  if (pos < list.size()) {
    list[pos] = last;
    slot_[slot_key(from, last)] = pos;
  }
}

bool Graph::add_edge(Vertex u, Vertex w) {
  if (u == w || !contains(u) || !contains(w)) return false;
  if (slot_.contains(slot_key(u, w))) return false;
  link(u, w);
  link(w, u);
  ++m_;
  return true;
}

bool Graph::erase_edge(Vertex u, Vertex w) {
  if (u == w || !contains(u) || !contains(w) || !slot_.contains(slot_key(u, w))) return false;
  unlink(u, w);
  unlink(w, u);
  --m_;
  return true;
}

std::vector<Vertex> Graph::erase_vertex(Vertex v) {
  if (!contains(v)) return {};
  auto former = std::move(adj_[static_cast<std::size_t>(v)]);
  adj_[static_cast<std::size_t>(v)].clear();
  for (Vertex u : former) {
    slot_.erase(slot_key(v, u));
    unlink(u, v);
  }
  m_ -= former.size();
  alive_[static_cast<std::size_t>(v)] = 0;
  --n_;
  return former;
}

void Graph::restore_vertex(Vertex v, std::span<const Vertex> neighbors) {
  if (v < 0 || v >= capacity() || contains(v)) throw std::logic_error("restore_vertex: vertex is present");
  alive_[static_cast<std::size_t>(v)] = 1;
  ++n_;
  adj_[static_cast<std::size_t>(v)].reserve(neighbors.size());
  for (Vertex u : neighbors) {
    link(v, u);
    link(u, v);
  }
  m_ += neighbors.size();
}

std::vector<Vertex> Graph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(n_);
  for (Vertex v = 0; v < capacity(); ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < capacity(); ++u)
    for (Vertex w : neighbors(u))
      if (u < w) out.push_back({u, w});
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  return vertices() == other.vertices() && edges() == other.edges();
}

DegeneracyOrdering degeneracy_ordering(const Graph& g) {
  DegeneracyOrdering out;
  const auto cap = static_cast<std::size_t>(g.capacity());
  out.position.assign(cap, -1);
  out.forward.assign(cap, {});
  if (g.num_vertices() == 0) return out;

  std::size_t max_deg = 0;
  std::vector<std::size_t> deg(cap, 0);
  for (Vertex v = 0; v < g.capacity(); ++v) {
    if (!g.contains(v)) continue;
    deg[static_cast<std::size_t>(v)] = g.degree(v);
    max_deg = std::max(max_deg, g.degree(v));
  }

  // Bucket queue: vert sorted by current degree, bin[d] = first index of degree d.
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (Vertex v = 0; v < g.capacity(); ++v)
    if (g.contains(v)) ++bin[deg[static_cast<std::size_t>(v)] + 1];
  for (std::size_t d = 1; d < bin.size(); ++d) bin[d] += bin[d - 1];
  std::vector<Vertex> vert(g.num_vertices());
  std::vector<std::size_t> pos(cap, 0);
  {
    auto next = bin;
    for (Vertex v = 0; v < g.capacity(); ++v) {
      if (!g.contains(v)) continue;
      auto& slot = next[deg[static_cast<std::size_t>(v)]];
      pos[static_cast<std::size_t>(v)] = slot;
      vert[slot++] = v;
    }
  }

  out.order.reserve(vert.size());
  for (std::size_t i = 0; i < vert.size(); ++i) {
    const Vertex v = vert[i];
    const auto dv = deg[static_cast<std::size_t>(v)];
    out.degeneracy = std::max(out.degeneracy, dv);
    out.position[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(i);
    out.order.push_back(v);
    for (Vertex u : g.neighbors(v)) {
      const auto uu = static_cast<std::size_t>(u);
      if (out.position[uu] >= 0) continue;
      const auto du = deg[uu];
      if (du > dv) {
        // Swap u with the first vertex of its bucket, then shrink the bucket.
        const auto pu = pos[uu];
        const auto pw = std::max(bin[du], i + 1);
        const Vertex w = vert[pw];
        if (u != w) {
          vert[pu] = w;
          pos[static_cast<std::size_t>(w)] = pu;
          vert[pw] = u;
          pos[uu] = pw;
        }
        bin[du] = pw + 1;
        --deg[uu];
      }
    }
  }

  for (Vertex v : out.order) {
    const auto pv = out.position[static_cast<std::size_t>(v)];
    for (Vertex u : g.neighbors(v))
      if (out.position[static_cast<std::size_t>(u)] > pv) out.forward[static_cast<std::size_t>(v)].push_back(u);
  }
  return out;
}

std::vector<Vertex> two_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  if (!g.contains(v)) return out;
  VertexMarker seen(g.capacity());
  seen.reset(g.capacity());
  seen.mark(v);
  out.push_back(v);
  for (Vertex u : g.neighbors(v))
    if (seen.mark(u)) out.push_back(u);
  for (Vertex u : g.neighbors(v))
    for (Vertex w : g.neighbors(u))
      if (seen.mark(w)) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t two_neighborhood_size(const Graph& g, Vertex v, std::size_t cap, VertexMarker& marker) {
  marker.reset(g.capacity());
  marker.mark(v);
  std::size_t count = 1 + g.degree(v);
  if (count > cap) return cap + 1;
  for (Vertex u : g.neighbors(v)) marker.mark(u);
  for (Vertex u : g.neighbors(v)) {
    for (Vertex w : g.neighbors(u)) {
      if (marker.mark(w) && ++count > cap) return cap + 1;
    }
  }
  return count;
}

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex w, std::size_t limit) {
  if (g.degree(u) > g.degree(w)) std::swap(u, w);
  std::size_t count = 0;
  for (Vertex x : g.neighbors(u)) {
    if (g.has_edge(x, w) && ++count >= limit) break;
  }
  return count;
}

bool compatible(const Graph& g, Vertex u, Vertex w) {
  if (u == w) return true;
  if (g.has_edge(u, w)) return true;
  return common_neighbors(g, u, w, 1) > 0;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> subset) {
  Subgraph sub;
  sub.to_parent.assign(subset.begin(), subset.end());
  std::sort(sub.to_parent.begin(), sub.to_parent.end());
  sub.to_parent.erase(std::unique(sub.to_parent.begin(), sub.to_parent.end()), sub.to_parent.end());

  std::vector<Vertex> local(static_cast<std::size_t>(g.capacity()), -1);
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    const Vertex p = sub.to_parent[i];
    if (!g.contains(p)) throw std::invalid_argument("induced_subgraph: vertex not in graph");
    local[static_cast<std::size_t>(p)] = static_cast<Vertex>(i);
  }

  sub.graph = Graph(static_cast<Vertex>(sub.to_parent.size()));
  for (std::size_t i = 0; i < sub.to_parent.size(); ++i) {
    for (Vertex q : g.neighbors(sub.to_parent[i])) {
      const Vertex j = local[static_cast<std::size_t>(q)];
      if (j > static_cast<Vertex>(i)) sub.graph.add_edge(static_cast<Vertex>(i), j);
    }
  }
  return sub;
}

double density(std::size_t n, std::size_t m) {
  if (n < 2) return 0.0;
  return static_cast<double>(m) / (static_cast<double>(n) * static_cast<double>(n - 1) / 2.0);
}

}  // namespace triclub
