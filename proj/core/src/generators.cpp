#include "triclub/generators.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace triclub::generators {

namespace {

using Rng = std::mt19937_64;

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

template <typename T>
T pick(Rng& rng, const std::vector<T>& from) {
  return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph erdos_renyi(Vertex n, double p, std::uint64_t seed) {
  require(n >= 0 && p >= 0 && p <= 1, "erdos_renyi: bad parameters");
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w = u + 1; w < n; ++w)
      if (uniform01(rng) < p) g.add_edge(u, w);
  return g;
}

Graph powerlaw_cluster(Vertex n, int links, double triad_probability, std::uint64_t seed) {
  require(links >= 1 && n > links && triad_probability >= 0 && triad_probability <= 1,
          "powerlaw_cluster: bad parameters");
  Rng rng(seed);
  Graph g(n);
  // Each endpoint occurrence, so a uniform pick is degree-proportional.
  std::vector<Vertex> endpoints;
  for (Vertex v = 0; v < links; ++v) endpoints.push_back(v);

  for (Vertex source = links; source < n; ++source) {
    auto attach = [&](Vertex target) {
      if (!g.add_edge(source, target)) return false;
      endpoints.push_back(source);
      endpoints.push_back(target);
      return true;
    };
    auto preferential = [&]() {
      for (;;) {
        const Vertex t = pick(rng, endpoints);
        if (t != source && !g.has_edge(source, t)) return t;
      }
    };
    Vertex last = preferential();
    attach(last);
    for (int made = 1; made < links; ++made) {
      bool closed = false;
      if (uniform01(rng) < triad_probability) {
        std::vector<Vertex> options;
        for (Vertex x : g.neighbors(last))
          if (x != source && !g.has_edge(source, x)) options.push_back(x);
        if (!options.empty()) {
          attach(pick(rng, options));
          closed = true;
        }
      }
      if (!closed) {
        last = preferential();
        attach(last);
      }
    }
  }
  return g;
}

Graph watts_strogatz(Vertex n, int neighbors, double rewire, std::uint64_t seed) {
  require(neighbors >= 2 && neighbors % 2 == 0 && n > neighbors && rewire >= 0 && rewire <= 1,
          "watts_strogatz: bad parameters");
  Rng rng(seed);
  Graph g(n);
  const int half = neighbors / 2;
  for (int j = 1; j <= half; ++j)
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + j) % n);
  std::uniform_int_distribution<Vertex> any(0, n - 1);
  for (int j = 1; j <= half; ++j) {
    for (Vertex v = 0; v < n; ++v) {
      const Vertex w = (v + j) % n;
      if (uniform01(rng) >= rewire || !g.has_edge(v, w)) continue;
      if (g.degree(v) >= static_cast<std::size_t>(n - 1)) continue;
      Vertex x = any(rng);
      while (x == v || g.has_edge(v, x)) x = any(rng);
      g.erase_edge(v, w);
      g.add_edge(v, x);
    }
  }
  return g;
}

Graph random_geometric(Vertex n, double radius, std::uint64_t seed) {
  require(n >= 0 && radius > 0, "random_geometric: bad parameters");
  Rng rng(seed);
  std::vector<double> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    x[static_cast<std::size_t>(v)] = uniform01(rng);
    y[static_cast<std::size_t>(v)] = uniform01(rng);
  }
  // Bucket grid with cell side >= radius; only neighbouring cells can hold partners.
  const int cells = std::max(1, static_cast<int>(std::floor(1.0 / radius)));
  auto cell_of = [&](double c) { return std::min(cells - 1, static_cast<int>(c * cells)); };
  std::vector<std::vector<Vertex>> grid(static_cast<std::size_t>(cells) * static_cast<std::size_t>(cells));
  for (Vertex v = 0; v < n; ++v)
    grid[static_cast<std::size_t>(cell_of(x[static_cast<std::size_t>(v)]) * cells +
                                  cell_of(y[static_cast<std::size_t>(v)]))]
        .push_back(v);

  Graph g(n);
  const double r2 = radius * radius;
  for (Vertex v = 0; v < n; ++v) {
    const auto vi = static_cast<std::size_t>(v);
    const int cx = cell_of(x[vi]), cy = cell_of(y[vi]);
    for (int dx = -1; dx <= 1; ++dx) {
      for (int dy = -1; dy <= 1; ++dy) {
        const int ax = cx + dx, ay = cy + dy;
        if (ax < 0 || ay < 0 || ax >= cells || ay >= cells) continue;
        for (Vertex w : grid[static_cast<std::size_t>(ax * cells + ay)]) {
          if (w <= v) continue;
          const auto wi = static_cast<std::size_t>(w);
          const double ddx = x[vi] - x[wi], ddy = y[vi] - y[wi];
          if (ddx * ddx + ddy * ddy <= r2) g.add_edge(v, w);
        }
      }
    }
  }
  return g;
}

Graph relaxed_caveman(Vertex groups, Vertex size, double rewire, std::uint64_t seed) {
  require(groups >= 1 && size >= 2 && rewire >= 0 && rewire <= 1, "relaxed_caveman: bad parameters");
  Rng rng(seed);
  const Vertex n = groups * size;
  Graph g(n);
  std::vector<Edge> clique_edges;
  for (Vertex c = 0; c < groups; ++c)
    for (Vertex a = 0; a < size; ++a)
      for (Vertex b = a + 1; b < size; ++b) clique_edges.push_back({c * size + a, c * size + b});
  for (const auto& e : clique_edges) g.add_edge(e.u, e.w);
  std::uniform_int_distribution<Vertex> any(0, n - 1);
  for (const auto& e : clique_edges) {
    if (uniform01(rng) >= rewire) continue;
    const Vertex x = any(rng);
    if (x == e.u || g.has_edge(e.u, x)) continue;
    g.erase_edge(e.u, e.w);
    g.add_edge(e.u, x);
  }
  return g;
}

}  // namespace triclub::generators
