#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "triclub/generators.hpp"
#include "triclub/io.hpp"

using namespace triclub;

int main(int argc, char** argv) {
  CLI::App app{"Write a seeded synthetic graph as an edge list"};
  std::string model = "powerlaw";
  Vertex n = 1000;
  int links = 4;
  double probability = 0.5;
  double radius = 0.05;
  Vertex group_size = 8;
  std::uint64_t seed = 1;
  std::string output;
  app.add_option("--model", model, "powerlaw, watts-strogatz, geometric, caveman or gnp")
      ->check(CLI::IsMember({"powerlaw", "watts-strogatz", "geometric", "caveman", "gnp"}));
  app.add_option("-n,--vertices", n, "Vertex count (caveman: number of groups)")->check(CLI::PositiveNumber);
  app.add_option("--links", links, "powerlaw: edges per new vertex; watts-strogatz: lattice degree");
  app.add_option("-p,--probability", probability, "Triad, rewiring or edge probability")->check(CLI::Range(0.0, 1.0));
  app.add_option("--radius", radius, "geometric: connection radius");
  app.add_option("--group-size", group_size, "caveman: clique size");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("-o,--output", output, "Output file (default: stdout)");
  CLI11_PARSE(app, argc, argv);

  try {
    Graph g;
    if (model == "powerlaw") g = generators::powerlaw_cluster(n, links, probability, seed);
    else if (model == "watts-strogatz") g = generators::watts_strogatz(n, links, probability, seed);
    else if (model == "geometric") g = generators::random_geometric(n, radius, seed);
    else if (model == "caveman") g = generators::relaxed_caveman(n, group_size, probability, seed);
    else g = generators::erdos_renyi(n, probability, seed);

    if (output.empty()) {
      io::write_edge_list(std::cout, g);
    } else {
      std::ofstream out(output);
      if (!out) throw std::runtime_error("cannot write " + output);
      io::write_edge_list(out, g);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
