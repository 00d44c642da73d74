#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "triclub/conflict_graph.hpp"
#include "triclub/solver.hpp"
#include "triclub/undo.hpp"

using namespace triclub;
using fixtures::make;

namespace {

using Edges = std::vector<Edge>;

/// Removes v from g and updates gc the way the solver does.
void drop_vertex(Graph& g, ConflictGraph& gc, Vertex v) {
  std::vector<Vertex> former;
  delete_vertex(g, nullptr, nullptr, v, &former);
  gc.update_after_vertex_deletion(g, v, former);
}

void drop_edge(Graph& g, ConflictGraph& gc, Vertex u, Vertex w) {
  delete_edge(g, nullptr, nullptr, u, w);
  gc.update_after_edge_deletion(g, u, w);
}

}  // namespace

TEST_CASE("build") {
  CHECK(ConflictGraph::build(fixtures::b6()).edges() == Edges{{0, 4}, {0, 5}, {1, 4}, {1, 5}});
  CHECK(ConflictGraph::build(fixtures::complete(4)).empty());
  const auto two = ConflictGraph::build(make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}));
  CHECK(two.num_conflicts() == 9);
  for (Vertex u = 0; u < 3; ++u)
    for (Vertex w = 3; w < 6; ++w) CHECK(two.conflicting(u, w));
  const auto b6 = ConflictGraph::build(fixtures::b6());
  CHECK(b6.degree(0) == 2);
  CHECK(b6.degree(2) == 0);
  CHECK(b6.conflicts_of(4) == std::vector<Vertex>{0, 1});
  CHECK(b6.first_conflict() == Edge{0, 4});
}

TEST_CASE("incremental vertex deletion") {
  SUBCASE("B6 minus 2") {
    auto g = fixtures::b6();
    auto gc = ConflictGraph::build(g);
    drop_vertex(g, gc, 2);
    CHECK(gc.conflicting(0, 3));
    CHECK(gc.conflicting(1, 3));
    CHECK(gc == ConflictGraph::build(g));
    CHECK(gc.num_conflicts() == 6);
  }
  SUBCASE("K4 minus a vertex") {
    auto g = fixtures::complete(4);
    auto gc = ConflictGraph::build(g);
    drop_vertex(g, gc, 1);
    CHECK(gc.empty());
    CHECK(gc.num_vertices() == 3);
  }
  SUBCASE("isolated vertex") {
    auto g = make(5, {{0, 1}, {1, 2}, {2, 3}});
    auto gc = ConflictGraph::build(g);
    const auto before = gc.edges();
    drop_vertex(g, gc, 4);
    Edges expected;
    for (const auto& e : before)
      if (e.u != 4 && e.w != 4) expected.push_back(e);
    CHECK(gc.edges() == expected);
    CHECK_FALSE(gc.contains(4));
  }
}

TEST_CASE("incremental edge deletion") {
  SUBCASE("B6 minus bridge") {
    auto g = fixtures::b6();
    auto gc = ConflictGraph::build(g);
    drop_edge(g, gc, 2, 3);
    CHECK(gc.num_conflicts() == 9);
    CHECK(gc == ConflictGraph::build(g));
  }
  SUBCASE("K4 minus 0-1") {
    auto g = fixtures::complete(4);
    auto gc = ConflictGraph::build(g);
    drop_edge(g, gc, 0, 1);
    CHECK(gc.empty());
  }
  SUBCASE("C4 minus an edge") {
    auto g = fixtures::cycle(4);
    auto gc = ConflictGraph::build(g);
    CHECK(gc.empty());
    drop_edge(g, gc, 0, 1);
    // Path 1-2-3-0: only the endpoints are three apart.
    CHECK(gc.edges() == Edges{{0, 1}});
    CHECK(gc == ConflictGraph::build(g));
  }
}

TEST_CASE("matchings") {
  const auto b6 = ConflictGraph::build(fixtures::b6());
  const auto m = greedy_maximal_matching(b6);
  CHECK(m == Edges{{0, 4}, {1, 5}});
  CHECK(maximum_matching(b6).size() == 2);
  CHECK(greedy_maximal_matching(ConflictGraph::build(fixtures::complete(5))).empty());
  CHECK(greedy_maximal_matching(ConflictGraph::build(make(4, {{0, 1}, {1, 2}, {2, 3}}))) == Edges{{0, 3}});

  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const auto g = fixtures::random_graph(rng, 2, 30, std::uniform_real_distribution<double>(0.05, 0.4)(rng));
    const auto gc = ConflictGraph::build(g);
    const auto greedy = greedy_maximal_matching(gc);
    const auto exact = maximum_matching(gc);
    CHECK(greedy.size() <= exact.size());
    CHECK(exact.size() <= 2 * greedy.size());
    std::vector<char> used(static_cast<std::size_t>(g.capacity()), 0);
    for (const auto& e : greedy) {
      CHECK(gc.conflicting(e.u, e.w));
      CHECK_FALSE(used[static_cast<std::size_t>(e.u)]);
      CHECK_FALSE(used[static_cast<std::size_t>(e.w)]);
      used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.w)] = 1;
    }
    // Maximality: every conflict has a matched endpoint.
    for (const auto& e : gc.edges()) CHECK((used[static_cast<std::size_t>(e.u)] || used[static_cast<std::size_t>(e.w)]));
  }
}

TEST_CASE("incremental maintenance equals rebuild, and rollback restores") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 300; ++round) {
    auto g = fixtures::random_graph(rng, 3, 40, std::uniform_real_distribution<double>(0.05, 0.5)(rng));
    auto gc = ConflictGraph::build(g);
    const auto g0 = g;
    const auto gc0 = gc;
    UndoLog log;
    const auto cp = log.checkpoint();
    const auto gcp = gc.checkpoint();
    while (g.num_vertices() > 1) {
      auto before = gc.edges();
      const auto vs = g.vertices();
      const Vertex v = vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)];
      if (rng() % 2 == 0 || g.degree(v) == 0) {
        std::vector<Vertex> former;
        delete_vertex(g, nullptr, &log, v, &former);
        gc.update_after_vertex_deletion(g, v, former);
      } else {
        const auto nb = g.neighbors(v);
        const Vertex w = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
        delete_edge(g, nullptr, &log, v, w);
        gc.update_after_edge_deletion(g, v, w);
      }
      REQUIRE(gc == ConflictGraph::build(g));
      // Conflicts among survivors never disappear.
      for (const auto& e : before)
        if (g.contains(e.u) && g.contains(e.w)) CHECK(gc.conflicting(e.u, e.w));
    }
    gc.rollback(gcp);
    undo(g, nullptr, log, cp);
    CHECK(g == g0);
    CHECK(gc == gc0);
  }
}

TEST_CASE("a set is a 2-club iff it induces no conflicts") {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 300; ++round) {
    const auto g = fixtures::random_graph(rng, 2, 14, std::uniform_real_distribution<double>(0.2, 0.8)(rng));
    std::vector<Vertex> subset;
    for (Vertex v : g.vertices())
      if (rng() % 2) subset.push_back(v);
    const auto sub = induced_subgraph(g, subset);
    const bool conflict_free = ConflictGraph::build(sub.graph).empty();
    CHECK(conflict_free == verify_solution(g, subset, 0, Variant::vertex).valid);
  }
}
