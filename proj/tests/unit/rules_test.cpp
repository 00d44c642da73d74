#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "triclub/rules.hpp"

using namespace triclub;
using fixtures::make;
using Vertices = std::vector<Vertex>;

namespace {

Vertices sorted(Vertices v) {
  std::sort(v.begin(), v.end());
  return v;
}

Vertices marked_of(const Workspace& ws) { return sorted(Vertices(ws.marked().begin(), ws.marked().end())); }

}  // namespace

TEST_CASE("low-degree rule") {
  {
    Workspace ws(fixtures::bowtie(), Variant::vertex, 1);
    CHECK_FALSE(rules::ldr(ws).changed);
    CHECK(ws.num_vertices() == 5);
  }
  {
    Workspace ws(fixtures::bowtie(), Variant::edge, 2);
    const auto out = rules::ldr(ws);
    CHECK(sorted(out.deleted_vertices) == Vertices{0, 1, 2, 3, 4});
    CHECK(ws.num_vertices() == 0);
  }
  {
    Workspace ws(fixtures::complete(4), Variant::vertex, 3);
    CHECK_FALSE(rules::ldr(ws).changed);
  }
  {
    // Degree 2 gives C(2,2) = 1 < 2 triangles.
    Workspace ws(fixtures::bowtie(), Variant::vertex, 2);
    rules::ldr(ws);
    CHECK(ws.num_vertices() == 0);
  }
  {
    Workspace ws(make(3, {{0, 1}}), Variant::edge, 0);
    CHECK_FALSE(rules::ldr(ws).changed);
  }
  {
    Workspace ws(fixtures::bowtie(), Variant::edge, 2);
    ws.set_root(1);
    CHECK(rules::ldr(ws).infeasible);
  }
}

TEST_CASE("low-triangle rule") {
  {
    Workspace ws(fixtures::bowtie(), Variant::vertex, 2);
    rules::ltr(ws);
    CHECK(ws.num_vertices() == 0);
  }
  {
    Workspace ws(fixtures::complete(4), Variant::edge, 2);
    CHECK_FALSE(rules::ltr(ws).changed);
    CHECK(ws.graph().num_edges() == 6);
  }
  {
    Workspace ws(fixtures::book3(), Variant::edge, 2);
    const auto out = rules::ltr(ws);
    CHECK(out.deleted_edges.size() == 7);
    CHECK(ws.num_vertices() == 0);
  }
  {
    // One pass deletes only the violators present at its start.
    Workspace ws(fixtures::book3(), Variant::edge, 2);
    const auto out = rules::ltr(ws, rules::Passes::one);
    CHECK(out.deleted_edges.size() == 6);
    CHECK(ws.graph().num_edges() == 1);
  }
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    rules::ltr(ws);
    CHECK(ws.num_vertices() == 6);
  }
}

TEST_CASE("incompatible-resolution rule") {
  for (bool with_gc : {false, true}) {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    if (with_gc) ws.build_conflict_graph();
    CHECK_FALSE(rules::irr(ws).changed);
    ws.mark(0);
    CHECK(sorted(rules::irr(ws).deleted_vertices) == Vertices{4, 5});
  }
  Workspace k4(fixtures::complete(4), Variant::vertex, 1);
  k4.build_conflict_graph();
  k4.mark(0);
  k4.mark(3);
  CHECK_FALSE(rules::irr(k4).changed);
}

TEST_CASE("marked-incompatible rule") {
  for (bool with_gc : {false, true}) {
    {
      Workspace ws(fixtures::b6(), Variant::vertex, 1);
      if (with_gc) ws.build_conflict_graph();
      ws.mark(0);
      CHECK_FALSE(rules::mir(ws).infeasible);
      ws.mark(4);
      CHECK(rules::mir(ws).infeasible);
    }
    {
      Workspace ws(fixtures::b6(), Variant::vertex, 1);
      if (with_gc) ws.build_conflict_graph();
      ws.mark(0);
      ws.mark(3);
      CHECK_FALSE(rules::mir(ws).infeasible);
    }
  }
}

TEST_CASE("cascading rule") {
  {
    Workspace ws(fixtures::complete(3), Variant::vertex, 1);
    ws.mark(0);
    CHECK(sorted(rules::cascading_rule(ws).newly_marked) == Vertices{1, 2});
  }
  {
    Workspace ws(fixtures::bowtie(), Variant::vertex, 1);
    ws.mark(0);
    CHECK_FALSE(rules::cascading_rule(ws).changed);
  }
  {
    Workspace ws(fixtures::bowtie(), Variant::vertex, 2);
    ws.mark(0);
    CHECK(sorted(rules::cascading_rule(ws).newly_marked) == Vertices{1, 2, 3, 4});
    CHECK(marked_of(ws) == Vertices{0, 1, 2, 3, 4});
  }
}

TEST_CASE("no-choice rule") {
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.mark(0);
    ws.mark(3);
    CHECK(rules::no_choice_rule(ws).newly_marked == Vertices{2});
  }
  {
    Workspace ws(fixtures::cycle(4), Variant::vertex, 1);
    ws.mark(0);
    ws.mark(2);
    CHECK_FALSE(rules::no_choice_rule(ws).changed);
  }
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.mark(2);
    ws.mark(3);
    CHECK_FALSE(rules::no_choice_rule(ws).changed);
  }
}

TEST_CASE("two-neighbourhood rule") {
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.context().k = 4;
    rules::two_nr(ws);
    CHECK(ws.num_vertices() == 0);
  }
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.context().k = 3;
    CHECK_FALSE(rules::two_nr(ws).changed);
  }
  {
    Workspace ws(make(4, {{0, 1}}), Variant::vertex, 1);
    CHECK_FALSE(rules::two_nr(ws).changed);
  }
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.context().k = 4;
    ws.set_root(0);
    CHECK(rules::two_nr(ws).infeasible);
  }
}

TEST_CASE("low-compatibility rule") {
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.build_conflict_graph();
    ws.context().k = 4;
    CHECK_FALSE(rules::lcr(ws).changed);
  }
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.build_conflict_graph();
    ws.context().k = 5;
    CHECK(sorted(rules::lcr(ws).deleted_vertices) == Vertices{0, 1, 4, 5});
  }
  {
    Workspace ws(fixtures::complete(5), Variant::vertex, 1);
    ws.build_conflict_graph();
    ws.context().k = 4;
    CHECK_FALSE(rules::lcr(ws).changed);
  }
  Workspace none(fixtures::b6(), Variant::vertex, 1);
  CHECK_THROWS_AS(rules::lcr(none), std::logic_error);
}

TEST_CASE("matching bound") {
  CHECK(rules::matching_bound(ConflictGraph::build(fixtures::b6())) == 4);
  CHECK(rules::matching_bound(ConflictGraph::build(fixtures::complete(7))) == 7);
  // C6 labelled so that opposite vertices are 0-1, 2-3, 4-5.
  const auto c6 = make(6, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 5}, {5, 0}});
  const auto gc = ConflictGraph::build(c6);
  CHECK(gc.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});
  CHECK(rules::matching_bound(gc) == 3);
  CHECK(rules::matching_bound(gc, true) == 3);

  Workspace ws(fixtures::b6(), Variant::vertex, 1);
  ws.build_conflict_graph();
  ws.context().k = 3;
  CHECK_FALSE(rules::matching_rule(ws).infeasible);
  ws.context().k = 4;
  CHECK(rules::matching_rule(ws).infeasible);
}

TEST_CASE("staged triangle-property loop") {
  {
    Workspace ws(fixtures::complete(5), Variant::vertex, 2);
    ws.build_conflict_graph();
    CHECK_FALSE(rules::establish_triangle_property(ws).changed);
  }
  {
    auto g = fixtures::bowtie();
    g.grow(6);
    g.add_edge(0, 5);
    Workspace ws(g, Variant::vertex, 1);
    ws.build_conflict_graph();
    const auto out = rules::establish_triangle_property(ws);
    CHECK(out.deleted_vertices == Vertices{5});
    CHECK(ws.graph() == [] {
      auto h = fixtures::bowtie();
      h.grow(6);
      h.erase_vertex(5);
      return h;
    }());
  }
  {
    Workspace ws(fixtures::book3(), Variant::edge, 2);
    ws.build_conflict_graph();
    rules::establish_triangle_property(ws);
    CHECK(ws.num_vertices() == 0);
  }
}

TEST_CASE("exhaustive rules are idempotent") {
  std::mt19937_64 rng(29);
  for (int round = 0; round < 200; ++round) {
    const auto g = fixtures::random_graph(rng, 4, 30, std::uniform_real_distribution<double>(0.1, 0.6)(rng));
    const int ell = static_cast<int>(rng() % 4);
    for (Variant variant : {Variant::vertex, Variant::edge}) {
      Workspace ws(g, variant, ell);
      ws.context().k = static_cast<int>(rng() % 8);
      rules::ldr(ws);
      CHECK_FALSE(rules::ldr(ws).changed);
      rules::ltr(ws);
      CHECK_FALSE(rules::ltr(ws).changed);
      rules::two_nr(ws);
      CHECK_FALSE(rules::two_nr(ws).changed);
      rules::basic_rules(ws);
      CHECK_FALSE(rules::basic_rules(ws).changed);
    }
  }
}

TEST_CASE("edge peel survivors survive the vertex peel") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 300; ++round) {
    const auto g = fixtures::random_graph(rng, 4, 30, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
    const int ell = 1 + static_cast<int>(rng() % 4);
    Workspace by_edge(g, Variant::edge, ell);
    Workspace by_vertex(g, Variant::vertex, ell);
    rules::ltr(by_edge);
    rules::ltr(by_vertex);
    for (Vertex v : by_edge.graph().vertices()) CHECK(by_vertex.graph().contains(v));
  }
}
