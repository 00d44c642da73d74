#pragma once

#include <cstdint>

#include "triclub/graph.hpp"

// Seeded random graph models. The same seed gives the same graph.
namespace triclub::generators {

/// G(n, p).
Graph erdos_renyi(Vertex n, double p, std::uint64_t seed);

/// Holme–Kim power-law cluster graph: preferential attachment with
/// `links` edges per new vertex, each followed by a triangle-closing step
/// with probability `triad_probability`.
Graph powerlaw_cluster(Vertex n, int links, double triad_probability, std::uint64_t seed);

/// Watts–Strogatz ring lattice (each vertex joined to `neighbors` nearest,
/// even) with rewiring probability `rewire`.
Graph watts_strogatz(Vertex n, int neighbors, double rewire, std::uint64_t seed);

/// Unit-square random geometric graph with connection radius `radius`.
Graph random_geometric(Vertex n, double radius, std::uint64_t seed);

/// `groups` cliques of `size` vertices; each edge is rewired to a uniform
/// random endpoint with probability `rewire`.
Graph relaxed_caveman(Vertex groups, Vertex size, double rewire, std::uint64_t seed);

}  // namespace triclub::generators
