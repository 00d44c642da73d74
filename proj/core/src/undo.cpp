#include "triclub/undo.hpp"

#include <atomic>
#include <stdexcept>

namespace triclub {

namespace {
std::atomic<std::uint64_t> next_log_id{1};
}

UndoLog::UndoLog() : id_(next_log_id.fetch_add(1)) {}

struct TriangleMutator {
  static std::vector<std::uint32_t> kill_vertex(TriangleIndex& idx, Vertex v) {
    std::vector<std::uint32_t> killed;
    if (static_cast<std::size_t>(v) >= idx.by_vertex_.size()) return killed;
    for (auto t : idx.by_vertex_[static_cast<std::size_t>(v)]) {
      if (!idx.tri_alive_[t]) continue;
      idx.kill(t);
      killed.push_back(t);
    }
    return killed;
  }

  static std::vector<std::uint32_t> kill_edge(TriangleIndex& idx, Vertex u, Vertex w) {
    std::vector<std::uint32_t> killed;
    if (static_cast<std::size_t>(std::max(u, w)) >= idx.by_vertex_.size()) return killed;
    const auto& lu = idx.by_vertex_[static_cast<std::size_t>(u)];
    const auto& lw = idx.by_vertex_[static_cast<std::size_t>(w)];
    const auto& shorter = lu.size() <= lw.size() ? lu : lw;
    const Vertex other = lu.size() <= lw.size() ? w : u;
    for (auto t : shorter) {
      if (!idx.tri_alive_[t] || !idx.tris_[t].contains(other)) continue;
      idx.kill(t);
      killed.push_back(t);
    }
    return killed;
  }

  static void drop_edge_counter(TriangleIndex& idx, Vertex u, Vertex w) { idx.edge_count_.erase(edge_key(u, w)); }
  static void add_edge_counter(TriangleIndex& idx, Vertex u, Vertex w) { idx.edge_count_.emplace(edge_key(u, w), 0); }

  static void revive(TriangleIndex& idx, const std::vector<std::uint32_t>& killed) {
    for (auto it = killed.rbegin(); it != killed.rend(); ++it) idx.revive(*it);
  }

  static std::vector<UndoLog::Entry>& entries(UndoLog& log) { return log.entries_; }
  static std::uint64_t id(const UndoLog& log) { return log.id_; }
};

MutationStatus delete_vertex(Graph& g, TriangleIndex* index, UndoLog* log, Vertex v,
                             std::vector<Vertex>* former_neighbors) {
  if (!g.contains(v)) return MutationStatus::absent;
  std::vector<std::uint32_t> killed;
  if (index) killed = TriangleMutator::kill_vertex(*index, v);
  auto neighbors = g.erase_vertex(v);
  if (index)
    for (Vertex u : neighbors) TriangleMutator::drop_edge_counter(*index, u, v);
  if (former_neighbors) *former_neighbors = neighbors;
  if (log) TriangleMutator::entries(*log).emplace_back(UndoLog::VertexRemoval{v, std::move(neighbors), std::move(killed)});
  return MutationStatus::applied;
}

MutationStatus delete_edge(Graph& g, TriangleIndex* index, UndoLog* log, Vertex u, Vertex w) {
  if (!g.has_edge(u, w)) return MutationStatus::absent;
  std::vector<std::uint32_t> killed;
  if (index) {
    killed = TriangleMutator::kill_edge(*index, u, w);
    TriangleMutator::drop_edge_counter(*index, u, w);
  }
  g.erase_edge(u, w);
  if (log) TriangleMutator::entries(*log).emplace_back(UndoLog::EdgeRemoval{u, w, std::move(killed)});
  return MutationStatus::applied;
}

void undo(Graph& g, TriangleIndex* index, UndoLog& log, UndoLog::Checkpoint checkpoint) {
  auto& entries = TriangleMutator::entries(log);
  if (checkpoint.log_id != TriangleMutator::id(log)) throw std::invalid_argument("undo: checkpoint belongs to another log");
  if (checkpoint.depth > entries.size()) throw std::invalid_argument("undo: checkpoint is above the current depth");
  while (entries.size() > checkpoint.depth) {
    auto entry = std::move(entries.back());
    entries.pop_back();
    if (auto* vr = std::get_if<UndoLog::VertexRemoval>(&entry)) {
      g.restore_vertex(vr->v, vr->neighbors);
      if (index) {
        for (Vertex u : vr->neighbors) TriangleMutator::add_edge_counter(*index, u, vr->v);
        TriangleMutator::revive(*index, vr->killed);
      }
    } else {
      auto& er = std::get<UndoLog::EdgeRemoval>(entry);
      g.add_edge(er.u, er.w);
      if (index) {
        TriangleMutator::add_edge_counter(*index, er.u, er.w);
        TriangleMutator::revive(*index, er.killed);
      }
    }
  }
}

}  // namespace triclub
