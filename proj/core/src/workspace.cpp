#include "triclub/workspace.hpp"

#include <stdexcept>
#include <string>

namespace triclub {

std::string_view to_string(Variant v) { return v == Variant::vertex ? "vertex" : "edge"; }

Variant parse_variant(std::string_view text) {
  if (text == "vertex") return Variant::vertex;
  if (text == "edge") return Variant::edge;
  throw std::invalid_argument("unknown variant: " + std::string(text));
}

Workspace::Workspace(Graph g, Variant variant, int ell, bool logging)
    : graph_(std::move(g)), logging_(logging) {
  if (ell < 0) throw std::invalid_argument("ell must be nonnegative");
  ctx_.ell = ell;
  ctx_.variant = variant;
  triangles_ = TriangleIndex::build(graph_);
  marked_flag_.assign(static_cast<std::size_t>(graph_.capacity()), 0);
}

void Workspace::build_conflict_graph() { conflicts_ = ConflictGraph::build(graph_); }

bool Workspace::mark(Vertex v) {
  auto& flag = marked_flag_[static_cast<std::size_t>(v)];
  if (flag) return false;
  flag = 1;
  marked_.push_back(v);
  return true;
}

void Workspace::set_root(Vertex v) {
  mark(v);
  ctx_.root = v;
}

bool Workspace::remove_vertex(Vertex v) {
  if (delete_vertex(graph_, &triangles_, logging_ ? &log_ : nullptr, v, &scratch_neighbors_) == MutationStatus::absent)
    return false;
  if (conflicts_) conflicts_->update_after_vertex_deletion(graph_, v, scratch_neighbors_);
  return true;
}

bool Workspace::remove_edge(Vertex u, Vertex w) {
  if (delete_edge(graph_, &triangles_, logging_ ? &log_ : nullptr, u, w) == MutationStatus::absent) return false;
  if (conflicts_) conflicts_->update_after_edge_deletion(graph_, u, w);
  return true;
}

Workspace::State Workspace::checkpoint() const {
  return {log_.checkpoint(), conflicts_ ? conflicts_->checkpoint() : 0, marked_.size()};
}

void Workspace::rollback(const State& state) {
  if (!logging_) throw std::logic_error("Workspace::rollback on a workspace without undo logging");
  // Conflict journal first: its entries were appended after the graph deletions they follow.
  if (conflicts_) conflicts_->rollback(state.conflicts);
  undo(graph_, &triangles_, log_, state.log);
  while (marked_.size() > state.marks) {
    marked_flag_[static_cast<std::size_t>(marked_.back())] = 0;
    marked_.pop_back();
  }
}

}  // namespace triclub
