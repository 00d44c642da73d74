#include "triclub/conflict_graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace triclub {

ConflictGraph ConflictGraph::build(const Graph& g) {
  ConflictGraph gc;
  gc.capacity_ = g.capacity();
  gc.words_ = (static_cast<std::size_t>(gc.capacity_) + 63) / 64;
  gc.bits_.assign(static_cast<std::size_t>(gc.capacity_) * gc.words_, 0);
  gc.alive_.assign(gc.words_, 0);
  gc.scratch_.assign(gc.words_, 0);
  gc.degree_.assign(static_cast<std::size_t>(gc.capacity_), 0);
  for (Vertex v = 0; v < gc.capacity_; ++v) {
    if (!g.contains(v)) continue;
    set(gc.alive_, v);
    ++gc.num_vertices_;
  }

  for (Vertex v = 0; v < gc.capacity_; ++v) {
    if (!g.contains(v)) continue;
    gc.collect_two_neighborhood(g, v);
    auto r = gc.row(v);
    std::size_t deg = 0;
    for (std::size_t i = 0; i < gc.words_; ++i) {
      r[i] = gc.alive_[i] & ~gc.scratch_[i];
      deg += static_cast<std::size_t>(std::popcount(r[i]));
    }
    gc.degree_[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(deg);
    gc.num_conflicts_ += deg;
  }
  gc.num_conflicts_ /= 2;
  return gc;
}

void ConflictGraph::collect_two_neighborhood(const Graph& g, Vertex x) {
  std::fill(scratch_.begin(), scratch_.end(), 0);
  set(scratch_, x);
  for (Vertex u : g.neighbors(x)) {
    set(scratch_, u);
    for (Vertex w : g.neighbors(u)) set(scratch_, w);
  }
}

void ConflictGraph::add_conflict(Vertex u, Vertex w) {
  set(row(u), w);
  set(row(w), u);
  ++degree_[static_cast<std::size_t>(u)];
  ++degree_[static_cast<std::size_t>(w)];
  ++num_conflicts_;
}

void ConflictGraph::remove_conflict(Vertex u, Vertex w) {
  clear(row(u), w);
  clear(row(w), u);
  --degree_[static_cast<std::size_t>(u)];
  --degree_[static_cast<std::size_t>(w)];
  --num_conflicts_;
}

void ConflictGraph::refresh_from(const Graph& g, Vertex x) {
  collect_two_neighborhood(g, x);
  auto r = row(x);
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t fresh = alive_[i] & ~scratch_[i] & ~r[i];
    while (fresh) {
      const auto bit = std::countr_zero(fresh);
      fresh &= fresh - 1;
      const auto y = static_cast<Vertex>(i * 64 + static_cast<std::size_t>(bit));
      add_conflict(x, y);
      journal_.emplace_back(AddedConflict{x, y});
    }
  }
}

void ConflictGraph::update_after_vertex_deletion(const Graph& g, Vertex w, std::span<const Vertex> former_neighbors) {
  if (contains(w)) {
    RemovedVertex removed{w, conflicts_of(w)};
    for (Vertex p : removed.partners) remove_conflict(w, p);
    clear(alive_, w);
    --num_vertices_;
    journal_.emplace_back(std::move(removed));
  }
  // Deleting w repairs nothing; new conflicts are pairs that used w as their
  // only common neighbour, so both ends are former neighbours of w.
  for (Vertex x : former_neighbors)
    if (contains(x)) refresh_from(g, x);
}

void ConflictGraph::update_after_edge_deletion(const Graph& g, Vertex x, Vertex y) {
  if (contains(x)) refresh_from(g, x);
  if (contains(y)) refresh_from(g, y);
}

void ConflictGraph::rollback(std::size_t checkpoint) {
  if (checkpoint > journal_.size()) throw std::invalid_argument("ConflictGraph::rollback: checkpoint above journal depth");
  while (journal_.size() > checkpoint) {
    auto entry = std::move(journal_.back());
    journal_.pop_back();
    if (auto* added = std::get_if<AddedConflict>(&entry)) {
      remove_conflict(added->u, added->w);
    } else {
      auto& removed = std::get<RemovedVertex>(entry);
      set(alive_, removed.v);
      ++num_vertices_;
      for (Vertex p : removed.partners) add_conflict(removed.v, p);
    }
  }
}

std::vector<Vertex> ConflictGraph::conflicts_of(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degree(v));
  auto r = row(v);
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t word = r[i];
    while (word) {
      out.push_back(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(word))));
      word &= word - 1;
    }
  }
  return out;
}

std::optional<Edge> ConflictGraph::first_conflict() const {
  if (num_conflicts_ == 0) return std::nullopt;
  for (Vertex u = 0; u < capacity_; ++u) {
    if (!contains(u) || degree(u) == 0) continue;
    // Partners below u were seen first, so the first hit here is above u.
    auto r = row(u);
    for (std::size_t i = static_cast<std::size_t>(u) >> 6; i < words_; ++i) {
      std::uint64_t word = r[i];
      if (i == static_cast<std::size_t>(u) >> 6) word &= ~((std::uint64_t{2} << (static_cast<unsigned>(u) & 63)) - 1);
      if (word) return Edge{u, static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(word)))};
    }
  }
  return std::nullopt;
}

std::vector<Edge> ConflictGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_conflicts_);
  for (Vertex u = 0; u < capacity_; ++u) {
    if (!contains(u)) continue;
    for (Vertex w : conflicts_of(u))
      if (u < w) out.push_back({u, w});
  }
  return out;
}

bool ConflictGraph::operator==(const ConflictGraph& other) const {
  if (num_vertices_ != other.num_vertices_ || num_conflicts_ != other.num_conflicts_) return false;
  const auto cap = std::max(capacity_, other.capacity_);
  for (Vertex v = 0; v < cap; ++v) {
    const bool a = v < capacity_ && contains(v);
    const bool b = v < other.capacity_ && other.contains(v);
    if (a != b) return false;
  }
  return edges() == other.edges();
}

std::vector<Edge> greedy_maximal_matching(const ConflictGraph& gc) {
  std::vector<Edge> matching;
  std::vector<char> matched(static_cast<std::size_t>(gc.capacity()), 0);
  for (Vertex u = 0; u < gc.capacity(); ++u) {
    if (!gc.contains(u) || matched[static_cast<std::size_t>(u)] || gc.degree(u) == 0) continue;
    for (Vertex w : gc.conflicts_of(u)) {
      if (matched[static_cast<std::size_t>(w)]) continue;
      matched[static_cast<std::size_t>(u)] = matched[static_cast<std::size_t>(w)] = 1;
      matching.push_back(Edge::canonical(u, w));
      break;
    }
  }
  return matching;
}

std::vector<Edge> maximum_matching(const ConflictGraph& gc) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BoostGraph bg(static_cast<std::size_t>(gc.capacity()));
  for (const auto& e : gc.edges()) boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.w), bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(static_cast<std::size_t>(gc.capacity()));
  boost::edmonds_maximum_cardinality_matching(bg, mate.data());
  std::vector<Edge> matching;
  const auto null = boost::graph_traits<BoostGraph>::null_vertex();
  for (std::size_t u = 0; u < mate.size(); ++u)
    if (mate[u] != null && u < mate[u]) matching.push_back({static_cast<Vertex>(u), static_cast<Vertex>(mate[u])});
  return matching;
}

}  // namespace triclub
