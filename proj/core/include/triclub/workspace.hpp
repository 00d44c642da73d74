#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "triclub/conflict_graph.hpp"
#include "triclub/graph.hpp"
#include "triclub/triangles.hpp"
#include "triclub/undo.hpp"

namespace triclub {

enum class Variant { vertex, edge };

std::string_view to_string(Variant v);
/// Throws std::invalid_argument for anything but "vertex" or "edge".
Variant parse_variant(std::string_view text);

/// State shared by the rules while they work on one (local) instance.
struct BranchContext {
  int ell = 0;
  Variant variant = Variant::vertex;
  /// Size of the best solution known so far; rules look for solutions of size > k.
  int k = 0;
  std::optional<Vertex> root;
};

/// A graph together with its triangle index, optional conflict graph, marked
/// set and undo journals. All deletions during reduction and branching go
/// through remove_vertex()/remove_edge() so the four stay consistent.
class Workspace {
 public:
  struct State {
    UndoLog::Checkpoint log;
    std::size_t conflicts = 0;
    std::size_t marks = 0;
  };

  Workspace(Graph g, Variant variant, int ell, bool logging = true);

  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  const Graph& graph() const { return graph_; }
  const TriangleIndex& triangles() const { return triangles_; }
  const ConflictGraph* conflicts() const { return conflicts_ ? &*conflicts_ : nullptr; }
  void build_conflict_graph();

  BranchContext& context() { return ctx_; }
  const BranchContext& context() const { return ctx_; }
  int ell() const { return ctx_.ell; }
  Variant variant() const { return ctx_.variant; }

  bool is_marked(Vertex v) const { return marked_flag_[static_cast<std::size_t>(v)] != 0; }
  std::span<const Vertex> marked() const { return marked_; }
  /// Returns false if v was already marked.
  bool mark(Vertex v);
  /// Marks v and makes it the root.
  void set_root(Vertex v);

  bool remove_vertex(Vertex v);
  bool remove_edge(Vertex u, Vertex w);

  State checkpoint() const;
  void rollback(const State& state);

  std::size_t num_vertices() const { return graph_.num_vertices(); }

 private:
  Graph graph_;
  TriangleIndex triangles_;
  std::optional<ConflictGraph> conflicts_;
  UndoLog log_;
  bool logging_;
  BranchContext ctx_;
  std::vector<char> marked_flag_;
  std::vector<Vertex> marked_;
  std::vector<Vertex> scratch_neighbors_;
};

}  // namespace triclub
