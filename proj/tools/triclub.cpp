#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triclub/benchmark_runner.hpp"
#include "triclub/io.hpp"
#include "triclub/metrics.hpp"
#include "triclub/oracle.hpp"
#include "triclub/solver.hpp"
#include "triclub/triangles.hpp"

using namespace triclub;

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::vector<int> ells{1};
  std::string variant = "vertex";
  std::string algorithm = "nlb";
  double time_limit = 3600;
  double density_threshold = 0.05;
  bool exact_matching = false;
  int workers = 1;
  std::string output;
  std::string format = "csv";
  bool oracle_check = false;
  bool metrics_only = false;
  bool show_solution = false;
};

std::vector<Variant> variants_of(const std::string& text) {
  if (text == "both") return {Variant::vertex, Variant::edge};
  return {parse_variant(text)};
}

std::vector<Algorithm> algorithms_of(const std::string& text) {
  if (text == "all") return {Algorithm::basic, Algorithm::basic_ub, Algorithm::nlb, Algorithm::multi_lb};
  return {parse_algorithm(text)};
}

void print_metrics(const std::string& name, const Graph& g) {
  const auto m = compute_metrics(g);
  std::cout << "instance: " << name << "\n"
            << "  vertices: " << m.vertices << "\n"
            << "  edges: " << m.edges << "\n"
            << "  density: " << density(m.vertices, m.edges) << "\n"
            << "  triangles: " << m.triangles << "\n"
            << "  degeneracy: " << degeneracy_ordering(g).degeneracy << "\n"
            << "  global clustering: " << m.global_cc << "\n"
            << "  min local clustering: " << m.min_local_cc << "\n";
}

/// Compares a solution with the brute-force optimum. Returns false on disagreement.
bool oracle_agrees(const io::LabeledGraph& in, int ell, Variant variant, const Solution& sol, const std::string& cell) {
  const auto& g = in.graph;
  if (g.capacity() > oracle::max_vertices) {
    std::cerr << cell << ": oracle check skipped (" << g.capacity() << " vertices > " << oracle::max_vertices << ")\n";
    return true;
  }
  oracle::EdgeList edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.w);
  const auto kind = variant == Variant::vertex ? oracle::Kind::vertex : oracle::Kind::edge;
  const auto best = oracle::brute_force_opt(g.capacity(), edges, ell, kind);
  const std::vector<int> chosen(sol.vertices.begin(), sol.vertices.end());
  const bool valid = oracle::is_triangle_two_club(g.capacity(), edges, chosen, ell, kind);
  const bool ok = valid && best.size == static_cast<int>(sol.size());
  std::cerr << cell << ": oracle " << best.size << ", solver " << sol.size() << (valid ? "" : " (invalid set)")
            << (ok ? " ok" : " MISMATCH") << "\n";
  return ok;
}

void print_solution(const io::LabeledGraph& in, const Solution& sol, const std::string& cell) {
  std::cerr << cell << ": size " << sol.size() << (sol.proven_optimal ? "" : " (time limit, not proven)") << "\n  vertices:";
  for (Vertex v : sol.vertices) std::cerr << ' ' << in.labels[static_cast<std::size_t>(v)];
  std::cerr << "\n";
  if (!sol.witness_edges.empty()) {
    std::cerr << "  witness edges:";
    for (const auto& e : sol.witness_edges)
      std::cerr << ' ' << in.labels[static_cast<std::size_t>(e.u)] << '-' << in.labels[static_cast<std::size_t>(e.w)];
    std::cerr << "\n";
  }
}

int run(const Options& opt) {
  if (const char* seed = std::getenv("TRICLUB_SEED")) {
    // Reserved: no randomised iteration order exists yet; only validate the value.
    std::size_t used = 0;
    (void)std::stoull(seed, &used);
    if (seed[used] != '\0') throw std::invalid_argument("TRICLUB_SEED must be an unsigned integer");
  }

  std::vector<std::pair<std::string, io::LabeledGraph>> inputs;
  for (const auto& path : opt.inputs) inputs.emplace_back(std::filesystem::path(path).stem().string(), io::parse_graph(path));

  if (opt.metrics_only) {
    for (const auto& [name, in] : inputs) print_metrics(name, in.graph);
    return 0;
  }

  bench::RunConfig cfg;
  for (const auto& p : opt.inputs) cfg.inputs.emplace_back(p);
  cfg.ells = opt.ells;
  cfg.variants = variants_of(opt.variant);
  cfg.algorithms = algorithms_of(opt.algorithm);
  cfg.time_limit = opt.time_limit;
  cfg.density_threshold = opt.density_threshold;
  cfg.exact_matching = opt.exact_matching;
  cfg.workers = opt.workers;
  cfg.format = bench::parse_format(opt.format);
  cfg.validate();

  SolverConfig base;
  base.time_limit = cfg.time_limit;
  base.density_threshold = cfg.density_threshold;
  base.exact_matching = cfg.exact_matching;
  base.workers = cfg.workers;

  std::unique_ptr<bench::Appender> appender;
  if (opt.output.empty()) appender = std::make_unique<bench::Appender>(std::cout, cfg.format);
  else appender = std::make_unique<bench::Appender>(opt.output, cfg.format);

  std::vector<bench::MetricsRecord> records;
  bool all_agree = true;
  for (const auto& [name, in] : inputs) {
    const bench::NamedGraph named{name, in.graph};
    for (int ell : cfg.ells)
      for (Variant variant : cfg.variants)
        for (Algorithm algorithm : cfg.algorithms) {
          SolverConfig sc = base;
          sc.algorithm = algorithm;
          const auto sol = solve(Instance{in.graph, ell, variant}, sc);
          const std::string cell = name + " ell=" + std::to_string(ell) + " " + std::string(to_string(variant)) + " " +
                                   std::string(to_string(algorithm));
          if (opt.show_solution) print_solution(in, sol, cell);
          if (opt.oracle_check) all_agree = oracle_agrees(in, ell, variant, sol, cell) && all_agree;
          records.push_back(bench::make_record(named, ell, variant, algorithm, sol));
          appender->append(records.back());
        }
  }
  appender->close();
  bench::print_summary(std::cerr, bench::summarize(records));
  return all_agree ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Exact maximum vertex/edge triangle 2-club solver and benchmark runner"};
  app.add_option("-i,--input", opt.inputs, "Edge-list files")->required()->check(CLI::ExistingFile);
  app.add_option("-l,--ell", opt.ells, "Triangle thresholds, e.g. --ell 1,2,3 (default 1)")
      ->delimiter(',')
      ->check(CLI::NonNegativeNumber);
  bool sweep = false;
  app.add_flag("--sweep", sweep, "Use the standard 27-value ell sweep");
  app.add_option("--variant", opt.variant, "vertex, edge or both")
      ->check(CLI::IsMember({"vertex", "edge", "both"}));
  app.add_option("--algorithm", opt.algorithm, "basic, basic-ub, nlb, multi-lb or all")
      ->check(CLI::IsMember({"basic", "basic-ub", "nlb", "multi-lb", "all"}));
  app.add_option("--time-limit", opt.time_limit, "Seconds per cell")->check(CLI::PositiveNumber);
  app.add_option("--density-threshold", opt.density_threshold, "Local density up to which 2-NR replaces LCR")
      ->check(CLI::Range(0.0, 1.0));
  app.add_flag("--exact-matching", opt.exact_matching, "Maximum instead of greedy maximal matching");
  app.add_option("--workers", opt.workers, "Worker threads per solve")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", opt.output, "Result file (default: stdout)");
  app.add_option("--format", opt.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--oracle-check", opt.oracle_check, "Cross-check small instances against brute force");
  app.add_flag("--metrics-only", opt.metrics_only, "Print graph metrics and exit");
  app.add_flag("--show-solution", opt.show_solution, "Print each solution to stderr");
  CLI11_PARSE(app, argc, argv);
  if (sweep) opt.ells = bench::default_ell_sweep();

  try {
    return run(opt);
  } catch (const io::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
