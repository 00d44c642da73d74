#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "triclub/bounds.hpp"
#include "triclub/rules.hpp"
#include "triclub/solver.hpp"

using namespace triclub;
using fixtures::make;
using Vertices = std::vector<Vertex>;

namespace {

const Algorithm all_algorithms[] = {Algorithm::basic, Algorithm::basic_ub, Algorithm::nlb, Algorithm::multi_lb};

Solution run(const Graph& g, int ell, Variant variant, Algorithm algorithm) {
  SolverConfig cfg;
  cfg.algorithm = algorithm;
  return solve(Instance{g, ell, variant}, cfg);
}

}  // namespace

TEST_CASE("names") {
  for (auto a : all_algorithms) CHECK(parse_algorithm(to_string(a)) == a);
  CHECK_THROWS_AS(parse_algorithm("fast"), std::invalid_argument);
  CHECK(parse_variant("edge") == Variant::edge);
  CHECK_THROWS_AS(parse_variant("vertices"), std::invalid_argument);
}

TEST_CASE("solve fixed fixtures") {
  for (auto a : all_algorithms) {
    CAPTURE(to_string(a));
    const auto vb6 = run(fixtures::b6(), 1, Variant::vertex, a);
    CHECK(vb6.size() == 3);
    CHECK(vb6.proven_optimal);
    CHECK(verify_solution(fixtures::b6(), vb6.vertices, 1, Variant::vertex).valid);

    const auto eb6 = run(fixtures::b6(), 1, Variant::edge, a);
    CHECK(eb6.size() == 3);
    CHECK(std::find(eb6.witness_edges.begin(), eb6.witness_edges.end(), Edge{2, 3}) == eb6.witness_edges.end());

    CHECK(run(fixtures::bowtie(), 1, Variant::vertex, a).size() == 5);
    const auto empty = run(fixtures::bowtie(), 2, Variant::vertex, a);
    CHECK(empty.size() == 0);
    CHECK(empty.vertices.empty());
    CHECK(empty.proven_optimal);

    const auto k4 = run(fixtures::complete(4), 2, Variant::edge, a);
    CHECK(k4.size() == 4);
    CHECK(k4.witness_edges == fixtures::complete(4).edges());
    CHECK(run(fixtures::complete(4), 3, Variant::vertex, a).size() == 4);
    CHECK(run(fixtures::complete(4), 3, Variant::edge, a).size() == 0);
  }
}

TEST_CASE("degenerate inputs") {
  for (auto a : all_algorithms) {
    CHECK(run(Graph(0), 1, Variant::vertex, a).size() == 0);
    // ell = 0 is plain 2-club.
    CHECK(run(make(3, {}), 0, Variant::vertex, a).size() == 1);
    CHECK(run(make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 0, Variant::vertex, a).size() == 3);
    CHECK(run(make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 0, Variant::edge, a).size() == 3);
    CHECK(run(fixtures::cycle(5), 0, Variant::vertex, a).size() == 5);
    CHECK(run(fixtures::cycle(5), 1, Variant::vertex, a).size() == 0);
  }
  SolverConfig bad;
  bad.density_threshold = 1.5;
  CHECK_THROWS_AS(solve(Instance{fixtures::b6(), 1, Variant::vertex}, bad), std::invalid_argument);
  CHECK_THROWS_AS(solve(Instance{fixtures::b6(), -1, Variant::vertex}, SolverConfig{}), std::invalid_argument);
  SolverConfig no_workers;
  no_workers.workers = 0;
  CHECK_THROWS_AS(solve(Instance{fixtures::b6(), 1, Variant::vertex}, no_workers), std::invalid_argument);
}

TEST_CASE("marked branching on local instances") {
  BranchOptions opts;
  {
    Workspace ws(fixtures::complete(4), Variant::vertex, 1);
    ws.build_conflict_graph();
    ws.set_root(0);
    const auto r = marked_branching(ws, opts);
    REQUIRE(r.best);
    CHECK(*r.best == Vertices{0, 1, 2, 3});
    CHECK(r.nodes == 1);
  }
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.build_conflict_graph();
    ws.set_root(2);
    const auto r = marked_branching(ws, opts);
    REQUIRE(r.best);
    CHECK(r.best->size() == 3);
    CHECK(std::find(r.best->begin(), r.best->end(), 2) != r.best->end());
    CHECK(ws.context().k == 3);
    // The workspace comes back untouched.
    CHECK(ws.num_vertices() == 6);
    CHECK(ws.marked().size() == 1);
  }
  {
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.build_conflict_graph();
    ws.set_root(2);
    ws.context().k = 3;
    CHECK_FALSE(marked_branching(ws, opts).best);
  }
  {
    BranchOptions direct;
    direct.node_rules.use_conflict_graph = false;
    direct.node_rules.use_matching = false;
    Workspace ws(fixtures::b6(), Variant::vertex, 1);
    ws.set_root(2);
    const auto r = marked_branching(ws, direct);
    REQUIRE(r.best);
    CHECK(r.best->size() == 3);
  }
  Workspace rootless(fixtures::b6(), Variant::vertex, 1);
  CHECK_THROWS_AS(marked_branching(rootless, opts), std::invalid_argument);
}

TEST_CASE("branching vertex choice") {
  const auto gc = ConflictGraph::build(fixtures::b6());
  const Vertex m2[] = {2};
  CHECK(select_branching_vertex(gc, m2) == 0);
  const auto single = ConflictGraph::build(make(4, {{0, 1}, {1, 2}, {2, 3}}));
  CHECK(select_branching_vertex(single, {}) == 0);
  const Vertex m0[] = {0};
  CHECK(select_branching_vertex(single, m0) == 3);
  CHECK_FALSE(select_branching_vertex(ConflictGraph::build(fixtures::complete(3)), {}));
}

TEST_CASE("verify_solution") {
  const Vertices all5{0, 1, 2, 3, 4};
  CHECK(verify_solution(fixtures::bowtie(), all5, 1, Variant::vertex).valid);
  CHECK_FALSE(verify_solution(fixtures::b6(), Vertices{0, 1, 2, 3}, 1, Variant::vertex).valid);
  const auto k4 = verify_solution(fixtures::complete(4), Vertices{0, 1, 2, 3}, 2, Variant::edge);
  CHECK(k4.valid);
  CHECK(k4.witness_edges.size() == 6);
  CHECK(verify_solution(fixtures::b6(), Vertices{}, 3, Variant::edge).valid);
  CHECK_FALSE(verify_solution(fixtures::b6(), Vertices{1}, 1, Variant::vertex).valid);
  CHECK(verify_solution(fixtures::b6(), Vertices{1}, 0, Variant::edge).valid);
  CHECK_THROWS_AS(verify_solution(fixtures::b6(), Vertices{0, 9}, 1, Variant::vertex), std::invalid_argument);
  // The bridge edge is peeled, disconnecting the two triangles.
  CHECK_FALSE(verify_solution(fixtures::b6(), Vertices{0, 1, 2, 3, 4, 5}, 1, Variant::edge).valid);
}

TEST_CASE("time limit returns the best bound found") {
  const auto g = generators::powerlaw_cluster(3000, 4, 0.6, 1);
  SolverConfig cfg;
  cfg.algorithm = Algorithm::multi_lb;
  cfg.time_limit = 0.0;
  const auto sol = solve(Instance{g, 1, Variant::vertex}, cfg);
  CHECK_FALSE(sol.proven_optimal);
  CHECK(verify_solution(g, sol.vertices, 1, Variant::vertex).valid);
}

TEST_CASE("parallel workers agree with sequential search") {
  std::mt19937_64 rng(41);
  for (int round = 0; round < 30; ++round) {
    const auto g = generators::powerlaw_cluster(120, 3, 0.7, rng());
    for (Variant variant : {Variant::vertex, Variant::edge}) {
      SolverConfig seq;
      SolverConfig par;
      par.workers = 3;
      const auto a = solve(Instance{g, 2, variant}, seq);
      const auto b = solve(Instance{g, 2, variant}, par);
      CHECK(a.size() == b.size());
      CHECK(verify_solution(g, b.vertices, 2, variant).valid);
    }
  }
}

TEST_CASE("determinism and algorithm agreement on mid-sized graphs") {
  std::mt19937_64 rng(43);
  for (int round = 0; round < 20; ++round) {
    const auto g = generators::powerlaw_cluster(200, 3, 0.5, rng());
    for (Variant variant : {Variant::vertex, Variant::edge}) {
      for (int ell : {1, 2, 4}) {
        std::optional<std::size_t> size;
        for (auto a : all_algorithms) {
          const auto first = run(g, ell, variant, a);
          const auto second = run(g, ell, variant, a);
          CHECK(first.vertices == second.vertices);
          CHECK(first.witness_edges == second.witness_edges);
          if (!size) size = first.size();
          CHECK(first.size() == *size);
          const auto check = verify_solution(g, first.vertices, ell, variant);
          CHECK(check.valid);
          if (variant == Variant::edge) CHECK(check.witness_edges == first.witness_edges);
        }
      }
    }
  }
}
