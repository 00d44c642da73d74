#include "triclub/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <absl/container/flat_hash_map.h>

namespace triclub::io {

LabeledGraph parse_graph(std::istream& in) {
  absl::flat_hash_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  auto id_of = [&](const std::string& token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<Vertex>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first[0] == '#' || first[0] == '%') continue;
    if (first == "p") continue;
    if (first == "e") {
      if (!(tokens >> first)) throw ParseError(line_no, "edge line without endpoints");
    }
    std::string second;
    if (!(tokens >> second)) throw ParseError(line_no, "expected two vertex labels, got one");
    if (second[0] == '#' || second[0] == '%') throw ParseError(line_no, "expected two vertex labels, got one");
    const Vertex u = id_of(first);
    const Vertex w = id_of(second);
    if (u != w) edges.push_back(Edge::canonical(u, w));
  }
  if (in.bad()) throw std::runtime_error("read error");

  LabeledGraph out;
  out.graph = Graph::from_edges(static_cast<Vertex>(labels.size()), edges);
  out.labels = std::move(labels);
  return out;
}

LabeledGraph parse_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return parse_graph(in);
}

void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>* labels) {
  auto name = [&](Vertex v) -> std::string {
    return labels ? (*labels)[static_cast<std::size_t>(v)] : std::to_string(v);
  };
  for (const auto& e : g.edges()) out << name(e.u) << ' ' << name(e.w) << '\n';
  for (Vertex v : g.vertices())
    if (g.degree(v) == 0) out << name(v) << ' ' << name(v) << '\n';
}

}  // namespace triclub::io
