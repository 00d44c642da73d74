#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "triclub/graph.hpp"

namespace triclub {

/// Incompatibility graph of a base Graph: u and w conflict iff dist(u, w) > 2.
///
/// Stored as a dense bit matrix over the base graph's id range, so it is meant
/// for local instances (one 2-neighbourhood), not for whole inputs. Updates are
/// journaled; checkpoint()/rollback() pair with the base graph's UndoLog.
class ConflictGraph {
 public:
  ConflictGraph() = default;

  /// One truncated depth-2 BFS per vertex.
  static ConflictGraph build(const Graph& g);

  Vertex capacity() const { return capacity_; }
  bool contains(Vertex v) const { return test(alive_, v); }
  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_conflicts() const { return num_conflicts_; }
  bool empty() const { return num_conflicts_ == 0; }

  bool conflicting(Vertex u, Vertex w) const { return test(row(u), w); }
  std::size_t degree(Vertex v) const { return degree_[static_cast<std::size_t>(v)]; }
  std::vector<Vertex> conflicts_of(Vertex v) const;
  /// First conflict edge in ascending (min id, max id) order.
  std::optional<Edge> first_conflict() const;
  std::vector<Edge> edges() const;

  /// `w` has already been deleted from `g`; `former_neighbors` are its neighbours before.
  void update_after_vertex_deletion(const Graph& g, Vertex w, std::span<const Vertex> former_neighbors);
  /// Edge xy has already been deleted from `g`.
  void update_after_edge_deletion(const Graph& g, Vertex x, Vertex y);

  std::size_t checkpoint() const { return journal_.size(); }
  void rollback(std::size_t checkpoint);

  /// Same vertex set and same conflict pairs.
  bool operator==(const ConflictGraph& other) const;

 private:
  struct AddedConflict {
    Vertex u;
    Vertex w;
  };
  struct RemovedVertex {
    Vertex v;
    std::vector<Vertex> partners;
  };
  using JournalEntry = std::variant<AddedConflict, RemovedVertex>;

  std::span<std::uint64_t> row(Vertex v) {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  static bool test(std::span<const std::uint64_t> bits, Vertex v) {
    return (bits[static_cast<std::size_t>(v) >> 6] >> (static_cast<unsigned>(v) & 63)) & 1u;
  }
  static void set(std::span<std::uint64_t> bits, Vertex v) {
    bits[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (static_cast<unsigned>(v) & 63);
  }
  static void clear(std::span<std::uint64_t> bits, Vertex v) {
    bits[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (static_cast<unsigned>(v) & 63));
  }

  void add_conflict(Vertex u, Vertex w);
  void remove_conflict(Vertex u, Vertex w);
  /// Adds conflicts between x and every live vertex outside N_2[x].
  void refresh_from(const Graph& g, Vertex x);
  void collect_two_neighborhood(const Graph& g, Vertex x);

  Vertex capacity_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint64_t> alive_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::uint32_t> degree_;
  std::size_t num_vertices_ = 0;
  std::size_t num_conflicts_ = 0;
  std::vector<JournalEntry> journal_;
};

/// Inclusion-maximal matching: vertices in ascending id order, each matched to
/// its first unmatched conflict partner by ascending id.
std::vector<Edge> greedy_maximal_matching(const ConflictGraph& gc);

/// Maximum-cardinality matching (Edmonds), for the exact variant of the
/// matching bound.
std::vector<Edge> maximum_matching(const ConflictGraph& gc);

}  // namespace triclub
