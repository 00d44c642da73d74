#pragma once

#include <optional>
#include <utility>
#include <vector>

// Exhaustive reference solver for small graphs. It deliberately depends on
// nothing else in the library: graphs are plain vertex counts and edge lists.
namespace triclub::oracle {

/// Largest vertex count the oracle accepts.
inline constexpr int max_vertices = 20;

enum class Kind { vertex, edge };

using EdgeList = std::vector<std::pair<int, int>>;

struct Result {
  int size = 0;
  /// Sorted vertex ids.
  std::vector<int> vertices;
  /// Edge variant: the maximal witness, as sorted (min, max) pairs.
  EdgeList witness_edges;
};

/// Checks the definition directly: all-pairs distances inside the set,
/// triangle counts, and the edge peel. `witness`, if given, receives the
/// peeled edge set for the edge variant.
bool is_triangle_two_club(int n, const EdgeList& edges, const std::vector<int>& subset, int ell, Kind kind,
                          EdgeList* witness = nullptr);

/// A maximum triangle 2-club (empty when only the empty set qualifies).
/// Throws std::invalid_argument when n exceeds max_vertices or ell < 0.
Result brute_force_opt(int n, const EdgeList& edges, int ell, Kind kind);

/// A maximum triangle 2-club containing every vertex of `must_contain` with
/// more than `k` vertices, or nullopt if there is none.
std::optional<Result> brute_force_constrained(int n, const EdgeList& edges, int ell, Kind kind,
                                              const std::vector<int>& must_contain, int k);

}  // namespace triclub::oracle
