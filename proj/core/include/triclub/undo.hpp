#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "triclub/graph.hpp"
#include "triclub/triangles.hpp"

namespace triclub {

/// Stack of reversible graph deletions.
class UndoLog {
 public:
  struct Checkpoint {
    std::uint64_t log_id = 0;
    std::size_t depth = 0;
  };

  struct VertexRemoval {
    Vertex v;
    std::vector<Vertex> neighbors;
    std::vector<std::uint32_t> killed;
  };
  struct EdgeRemoval {
    Vertex u;
    Vertex w;
    std::vector<std::uint32_t> killed;
  };
  using Entry = std::variant<VertexRemoval, EdgeRemoval>;

  UndoLog();
  UndoLog(const UndoLog&) = delete;
  UndoLog& operator=(const UndoLog&) = delete;
  UndoLog(UndoLog&&) noexcept = default;
  UndoLog& operator=(UndoLog&&) noexcept = default;

  Checkpoint checkpoint() const { return {id_, entries_.size()}; }
  std::size_t depth() const { return entries_.size(); }

 private:
  friend struct TriangleMutator;
  std::uint64_t id_;
  std::vector<Entry> entries_;
};

enum class MutationStatus { applied, absent };

/// Deletes v and its incident edges, killing every triangle through v.
/// `index` and `log` may be null. If `former_neighbors` is given it receives
/// the neighbours v had before the deletion.
MutationStatus delete_vertex(Graph& g, TriangleIndex* index, UndoLog* log, Vertex v,
                             std::vector<Vertex>* former_neighbors = nullptr);

/// Deletes edge uw, killing the triangles {u, w, x} for every common neighbour x.
MutationStatus delete_edge(Graph& g, TriangleIndex* index, UndoLog* log, Vertex u, Vertex w);

/// Pops the log back to `checkpoint`, restoring graph and counters exactly.
/// Throws std::invalid_argument for a checkpoint from another log or one that
/// lies above the current depth. `index` must be the index (or null) that
/// was passed to the deletions being undone.
void undo(Graph& g, TriangleIndex* index, UndoLog& log, UndoLog::Checkpoint checkpoint);

}  // namespace triclub
