#include "triclub/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace triclub::rules {

void RuleOutcome::merge(RuleOutcome&& other) {
  deleted_vertices.insert(deleted_vertices.end(), other.deleted_vertices.begin(), other.deleted_vertices.end());
  deleted_edges.insert(deleted_edges.end(), other.deleted_edges.begin(), other.deleted_edges.end());
  newly_marked.insert(newly_marked.end(), other.newly_marked.begin(), other.newly_marked.end());
  infeasible = infeasible || other.infeasible;
  changed = changed || other.changed;
}

namespace {

bool degree_too_low(const Workspace& ws, Vertex v) {
  const auto deg = static_cast<std::int64_t>(ws.graph().degree(v));
  const std::int64_t ell = ws.ell();
  if (ws.variant() == Variant::vertex) return deg * (deg - 1) / 2 < ell;
  return ell >= 1 && deg <= ell;
}

bool any_marked(const Workspace& ws, const std::vector<Vertex>& batch) {
  return std::any_of(batch.begin(), batch.end(), [&](Vertex v) { return ws.is_marked(v); });
}

/// Deletes `batch`, recording it. Returns false (and sets infeasible) without
/// deleting anything if the batch contains a marked vertex.
bool delete_batch(Workspace& ws, const std::vector<Vertex>& batch, RuleOutcome& out) {
  if (batch.empty()) return true;
  if (any_marked(ws, batch)) {
    out.infeasible = true;
    return false;
  }
  for (Vertex v : batch) {
    if (ws.remove_vertex(v)) {
      out.deleted_vertices.push_back(v);
      out.changed = true;
    }
  }
  return true;
}

/// Exhaustive peel of vertices by `violates`, re-checking only the neighbours
/// of deleted vertices after the first full scan.
template <typename Violates>
RuleOutcome peel_vertices(Workspace& ws, Passes passes, Violates violates) {
  RuleOutcome out;
  const auto& g = ws.graph();
  std::vector<Vertex> batch;
  for (Vertex v = 0; v < g.capacity(); ++v)
    if (g.contains(v) && violates(v)) batch.push_back(v);

  VertexMarker seen(g.capacity());
  std::vector<Vertex> affected;
  while (!batch.empty()) {
    seen.reset(g.capacity());
    for (Vertex v : batch) seen.mark(v);
    affected.clear();
    for (Vertex v : batch)
      for (Vertex u : g.neighbors(v))
        if (seen.mark(u)) affected.push_back(u);
    if (!delete_batch(ws, batch, out)) return out;
    if (passes == Passes::one) break;
    batch.clear();
    for (Vertex u : affected)
      if (g.contains(u) && violates(u)) batch.push_back(u);
    std::sort(batch.begin(), batch.end());
  }
  return out;
}

RuleOutcome ltr_edges(Workspace& ws, Passes passes) {
  RuleOutcome out;
  const auto& g = ws.graph();
  const auto& idx = ws.triangles();
  const std::int64_t ell = ws.ell();
  if (ell == 0) return out;

  std::vector<Edge> batch;
  for (Vertex u = 0; u < g.capacity(); ++u)
    for (Vertex w : g.neighbors(u))
      if (u < w && idx.edge_count(u, w) < ell) batch.push_back({u, w});
  std::sort(batch.begin(), batch.end());

  VertexMarker touched(g.capacity());
  std::vector<Vertex> endpoints;
  std::vector<Vertex> isolated;
  // Isolated vertices present from the start go in the first pass.
  for (Vertex v = 0; v < g.capacity(); ++v)
    if (g.contains(v) && g.degree(v) == 0) isolated.push_back(v);

  bool first = true;
  while (!batch.empty() || (first && !isolated.empty())) {
    first = false;
    touched.reset(g.capacity());
    endpoints.clear();
    for (const auto& e : batch) {
      if (ws.remove_edge(e.u, e.w)) {
        out.deleted_edges.push_back(e);
        out.changed = true;
      }
      if (touched.mark(e.u)) endpoints.push_back(e.u);
      if (touched.mark(e.w)) endpoints.push_back(e.w);
    }
    for (Vertex v : endpoints)
      if (g.contains(v) && g.degree(v) == 0) isolated.push_back(v);
    std::sort(isolated.begin(), isolated.end());
    if (!delete_batch(ws, isolated, out)) return out;
    isolated.clear();
    if (passes == Passes::one) break;

    batch.clear();
    for (Vertex u : endpoints) {
      if (!g.contains(u)) continue;
      for (Vertex w : g.neighbors(u)) {
        if (idx.edge_count(u, w) >= ell) continue;
        // An edge between two touched endpoints is seen from both ends.
        if (touched.marked(w) && w < u) continue;
        batch.push_back(Edge::canonical(u, w));
      }
    }
    std::sort(batch.begin(), batch.end());
  }
  return out;
}

}  // namespace

RuleOutcome ldr(Workspace& ws) {
  return peel_vertices(ws, Passes::exhaustive, [&](Vertex v) { return degree_too_low(ws, v); });
}

RuleOutcome ltr(Workspace& ws, Passes passes) {
  if (ws.variant() == Variant::edge) return ltr_edges(ws, passes);
  const std::int64_t ell = ws.ell();
  return peel_vertices(ws, passes, [&](Vertex v) { return ws.triangles().vertex_count(v) < ell; });
}

RuleOutcome irr(Workspace& ws) {
  RuleOutcome out;
  if (ws.marked().empty()) return out;
  const auto& g = ws.graph();
  std::vector<Vertex> batch;
  if (const auto* gc = ws.conflicts()) {
    VertexMarker seen(g.capacity());
    seen.reset(g.capacity());
    for (Vertex m : ws.marked()) {
      if (!g.contains(m)) continue;
      for (Vertex u : gc->conflicts_of(m))
        if (!ws.is_marked(u) && seen.mark(u)) batch.push_back(u);
    }
    std::sort(batch.begin(), batch.end());
  } else {
    for (Vertex u = 0; u < g.capacity(); ++u) {
      if (!g.contains(u) || ws.is_marked(u)) continue;
      for (Vertex m : ws.marked()) {
        if (g.contains(m) && !compatible(g, u, m)) {
          batch.push_back(u);
          break;
        }
      }
    }
  }
  delete_batch(ws, batch, out);
  return out;
}

RuleOutcome mir(Workspace& ws) {
  RuleOutcome out;
  const auto marked = ws.marked();
  const auto& g = ws.graph();
  const auto* gc = ws.conflicts();
  for (std::size_t i = 0; i < marked.size() && !out.infeasible; ++i) {
    if (!g.contains(marked[i])) {
      out.infeasible = true;
      break;
    }
    for (std::size_t j = i + 1; j < marked.size(); ++j) {
      if (!g.contains(marked[j])) continue;
      const bool clash = gc ? gc->conflicting(marked[i], marked[j]) : !compatible(g, marked[i], marked[j]);
      if (clash) {
        out.infeasible = true;
        break;
      }
    }
  }
  return out;
}

RuleOutcome cascading_rule(Workspace& ws) {
  RuleOutcome out;
  const std::int64_t ell = ws.ell();
  if (ell == 0) return out;
  const auto& g = ws.graph();
  const auto& idx = ws.triangles();
  std::vector<Vertex> queue(ws.marked().begin(), ws.marked().end());
  while (!queue.empty()) {
    const Vertex v = queue.back();
    queue.pop_back();
    if (!g.contains(v)) continue;
    const auto xv = idx.vertex_count(v);
    if (xv < ell) {
      // Every other vertex would have to be marked; no solution contains v.
      out.infeasible = true;
      return out;
    }
    for (Vertex u : g.neighbors(v)) {
      if (ws.is_marked(u)) continue;
      if (xv - idx.edge_count(v, u) < ell) {
        ws.mark(u);
        out.newly_marked.push_back(u);
        out.changed = true;
        queue.push_back(u);
      }
    }
  }
  return out;
}

RuleOutcome no_choice_rule(Workspace& ws) {
  RuleOutcome out;
  const auto& g = ws.graph();
  bool progress = true;
  while (progress) {
    progress = false;
    const std::vector<Vertex> marked(ws.marked().begin(), ws.marked().end());
    for (std::size_t i = 0; i < marked.size(); ++i) {
      const Vertex u = marked[i];
      if (!g.contains(u)) continue;
      for (std::size_t j = i + 1; j < marked.size(); ++j) {
        const Vertex w = marked[j];
        if (!g.contains(w) || g.has_edge(u, w)) continue;
        Vertex a = u, b = w;
        if (g.degree(a) > g.degree(b)) std::swap(a, b);
        Vertex unique = -1;
        int found = 0;
        for (Vertex x : g.neighbors(a)) {
          if (g.has_edge(x, b)) {
            unique = x;
            if (++found > 1) break;
          }
        }
        if (found == 1 && ws.mark(unique)) {
          out.newly_marked.push_back(unique);
          out.changed = true;
          progress = true;
        }
      }
    }
  }
  return out;
}

RuleOutcome two_nr(Workspace& ws) {
  RuleOutcome out;
  const auto k = static_cast<std::size_t>(std::max(ws.context().k, 0));
  if (k == 0) return out;
  const auto& g = ws.graph();
  VertexMarker marker(g.capacity());
  auto small = [&](Vertex v) { return two_neighborhood_size(g, v, k, marker) <= k; };

  std::vector<Vertex> batch;
  for (Vertex v = 0; v < g.capacity(); ++v)
    if (g.contains(v) && small(v)) batch.push_back(v);

  VertexMarker seen(g.capacity());
  std::vector<Vertex> affected;
  while (!batch.empty()) {
    // Deleting v can only shrink N_2 of vertices within distance 2 of v.
    seen.reset(g.capacity());
    for (Vertex v : batch) seen.mark(v);
    affected.clear();
    for (Vertex v : batch) {
      for (Vertex u : g.neighbors(v)) {
        if (seen.mark(u)) affected.push_back(u);
        for (Vertex x : g.neighbors(u))
          if (seen.mark(x)) affected.push_back(x);
      }
    }
    if (!delete_batch(ws, batch, out)) return out;
    batch.clear();
    for (Vertex u : affected)
      if (g.contains(u) && small(u)) batch.push_back(u);
    std::sort(batch.begin(), batch.end());
  }
  return out;
}

RuleOutcome lcr(Workspace& ws) {
  const auto* gc = ws.conflicts();
  if (!gc) throw std::logic_error("lcr requires a conflict graph");
  RuleOutcome out;
  const auto& g = ws.graph();
  const auto threshold = static_cast<std::int64_t>(g.num_vertices()) - ws.context().k + 1;
  std::vector<Vertex> batch;
  for (Vertex v = 0; v < g.capacity(); ++v)
    if (g.contains(v) && static_cast<std::int64_t>(gc->degree(v)) >= threshold) batch.push_back(v);
  delete_batch(ws, batch, out);
  return out;
}

std::int64_t matching_bound(const ConflictGraph& gc, bool exact) {
  const auto matched = exact ? maximum_matching(gc).size() : greedy_maximal_matching(gc).size();
  return static_cast<std::int64_t>(gc.num_vertices()) - static_cast<std::int64_t>(matched);
}

RuleOutcome matching_rule(Workspace& ws, bool exact) {
  const auto* gc = ws.conflicts();
  if (!gc) throw std::logic_error("matching_rule requires a conflict graph");
  RuleOutcome out;
  if (gc->empty()) {
    out.infeasible = static_cast<std::int64_t>(gc->num_vertices()) <= ws.context().k;
    return out;
  }
  out.infeasible = matching_bound(*gc, exact) <= ws.context().k;
  return out;
}

RuleOutcome basic_rules(Workspace& ws) {
  RuleOutcome total;
  for (;;) {
    total.merge(ldr(ws));
    if (total.infeasible) return total;
    auto pass = ltr(ws, Passes::one);
    const bool deleted = !pass.deleted_vertices.empty() || !pass.deleted_edges.empty();
    total.merge(std::move(pass));
    if (total.infeasible || !deleted) return total;
  }
}

RuleOutcome establish_triangle_property(Workspace& ws) {
  RuleOutcome total;
  for (;;) {
    auto step1 = lcr(ws);
    const bool lcr_deleted = !step1.deleted_vertices.empty();
    total.merge(std::move(step1));
    if (total.infeasible) return total;
    if (lcr_deleted) {
      total.merge(ldr(ws));
      if (total.infeasible) return total;
      continue;
    }
    auto step3 = ltr(ws, Passes::one);
    const bool ltr_deleted = !step3.deleted_vertices.empty() || !step3.deleted_edges.empty();
    total.merge(std::move(step3));
    if (total.infeasible) return total;
    if (!ltr_deleted) return total;
    total.merge(ldr(ws));
    if (total.infeasible) return total;
  }
}

RuleOutcome apply_node_rules(Workspace& ws, const NodeRules& which, RuleCounters* counters) {
  RuleOutcome total;
  RuleCounters local;
  auto& c = counters ? *counters : local;
  auto step = [&](RuleOutcome&& r, std::int64_t& counter) {
    if (r.changed || r.infeasible) ++counter;
    const bool changed = r.changed;
    total.merge(std::move(r));
    return changed;
  };

  for (;;) {
    bool changed = false;
    changed |= step(ldr(ws), c.ldr);
    if (total.infeasible) return total;
    changed |= step(ltr(ws), c.ltr);
    if (total.infeasible) return total;
    if (which.use_conflict_graph && which.use_lcr)
      changed |= step(lcr(ws), c.lcr);
    else
      changed |= step(two_nr(ws), c.two_nr);
    if (total.infeasible) return total;
    changed |= step(irr(ws), c.irr);
    if (total.infeasible) return total;
    changed |= step(mir(ws), c.mir);
    if (total.infeasible) return total;
    changed |= step(cascading_rule(ws), c.cr);
    if (total.infeasible) return total;
    changed |= step(no_choice_rule(ws), c.ncr);
    if (total.infeasible) return total;
    if (changed) continue;
    if (which.use_conflict_graph && which.use_matching) {
      step(matching_rule(ws, which.exact_matching), c.matching);
    }
    return total;
  }
}

}  // namespace triclub::rules
