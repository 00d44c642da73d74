#pragma once

#include <cstdint>
#include <vector>

#include "triclub/workspace.hpp"

namespace triclub::rules {

/// What one rule application did. `infeasible` means the current branch has
/// no solution of size > k that contains every marked vertex.
struct RuleOutcome {
  std::vector<Vertex> deleted_vertices;
  std::vector<Edge> deleted_edges;
  std::vector<Vertex> newly_marked;
  bool infeasible = false;
  bool changed = false;

  void merge(RuleOutcome&& other);
};

enum class Passes { one, exhaustive };

/// Low-Degree Rule. Vertex variant: delete v when C(deg(v), 2) < ell.
/// Edge variant: delete v when deg(v) <= ell (only for ell >= 1).
RuleOutcome ldr(Workspace& ws);

/// Low-Triangle Rule. Vertex variant deletes vertices in fewer than ell
/// triangles; edge variant deletes edges in fewer than ell triangles and then
/// isolated vertices. Each pass collects the violators present at its start
/// and deletes them together.
RuleOutcome ltr(Workspace& ws, Passes passes = Passes::exhaustive);

/// Incompatible-Resolution Rule: delete unmarked vertices incompatible with a
/// marked one. Uses the conflict graph when present, direct tests otherwise.
RuleOutcome irr(Workspace& ws);

/// Marked-Incompatible Rule: infeasible iff two marked vertices conflict.
RuleOutcome mir(Workspace& ws);

/// Cascading Rule: mark u when x_v - x_uv < ell for some marked v.
RuleOutcome cascading_rule(Workspace& ws);

/// No-Choice Rule: mark the unique common neighbour of two non-adjacent marked vertices.
RuleOutcome no_choice_rule(Workspace& ws);

/// 2-Neighbourhood Rule: delete v when |N_2[v]| <= k.
RuleOutcome two_nr(Workspace& ws);

/// Low-Compatibility Rule: delete v with conflict degree >= n - k + 1.
/// Requires the conflict graph.
RuleOutcome lcr(Workspace& ws);

/// |V(G_c)| - b for a matching of size b. Every 2-club inside the instance
/// has at most this many vertices.
std::int64_t matching_bound(const ConflictGraph& gc, bool exact = false);

/// Matching Rule: infeasible when matching_bound() <= k. Requires the conflict graph.
RuleOutcome matching_rule(Workspace& ws, bool exact = false);

/// LDR and LTR until neither changes anything.
RuleOutcome basic_rules(Workspace& ws);

/// Staged loop: (1) LCR; (2) if it deleted, LDR and back to 1; (3) one LTR
/// pass; (4) if it deleted, LDR and back to 1. Requires the conflict graph.
RuleOutcome establish_triangle_property(Workspace& ws);

/// Which rules run inside a branching node.
struct NodeRules {
  bool use_conflict_graph = true;
  /// LCR when true, 2-NR otherwise.
  bool use_lcr = false;
  bool use_matching = true;
  bool exact_matching = false;
};

struct RuleCounters {
  std::int64_t ldr = 0, ltr = 0, lcr = 0, two_nr = 0, irr = 0, mir = 0, cr = 0, ncr = 0, matching = 0;
};

/// Basic rules, then LCR or 2-NR, then the marking rules (IRR, MIR, CR,
/// NCR), then the Matching Rule; repeated until a full sweep changes nothing.
RuleOutcome apply_node_rules(Workspace& ws, const NodeRules& which, RuleCounters* counters = nullptr);

}  // namespace triclub::rules
