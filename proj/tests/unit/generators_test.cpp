#include <doctest.h>

#include "triclub/generators.hpp"
#include "triclub/metrics.hpp"

using namespace triclub;

TEST_CASE("generators are seeded and well formed") {
  const auto a = generators::powerlaw_cluster(1000, 4, 0.6, 9);
  const auto b = generators::powerlaw_cluster(1000, 4, 0.6, 9);
  CHECK(a == b);
  CHECK(a.num_vertices() == 1000);
  CHECK(a.num_edges() == 4 * (1000 - 4));
  CHECK(compute_metrics(a).global_cc > 0.05);
  CHECK_FALSE(a == generators::powerlaw_cluster(1000, 4, 0.6, 10));

  const auto ws = generators::watts_strogatz(500, 6, 0.1, 1);
  CHECK(ws.num_edges() == 1500);

  const auto rg = generators::random_geometric(2000, 0.04, 2);
  CHECK(rg.num_vertices() == 2000);
  CHECK(rg.num_edges() > 0);
  for (const auto& e : rg.edges()) CHECK(e.u < e.w);

  const auto cave = generators::relaxed_caveman(10, 6, 0.0, 3);
  CHECK(cave.num_edges() == 10 * 15);
  const auto relaxed = generators::relaxed_caveman(10, 6, 0.2, 3);
  CHECK(relaxed.num_edges() == 10 * 15);

  const auto er = generators::erdos_renyi(30, 1.0, 4);
  CHECK(er.num_edges() == 435);
  CHECK_THROWS_AS(generators::watts_strogatz(10, 3, 0.1, 1), std::invalid_argument);
}
