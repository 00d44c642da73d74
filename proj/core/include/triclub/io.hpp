#pragma once

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "triclub/graph.hpp"

namespace triclub::io {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct LabeledGraph {
  Graph graph;
  /// labels[id] is the token the vertex had in the input.
  std::vector<std::string> labels;
};

/// Edge-list reader. Lines are "u w" (extra columns ignored) or DIMACS
/// "e u w"; '#' and '%' start comments; "p edge n m" / "p n m" headers are
/// skipped. Tokens become dense ids in order of first appearance; loops are
/// dropped (their vertex kept) and duplicates merged.
LabeledGraph parse_graph(std::istream& in);
/// Throws std::runtime_error if the file cannot be opened.
LabeledGraph parse_graph(const std::filesystem::path& path);

/// One "u w" line per edge with u < w in sorted order, then "v v" for each
/// isolated vertex so that re-parsing keeps it.
void write_edge_list(std::ostream& out, const Graph& g, const std::vector<std::string>* labels = nullptr);

}  // namespace triclub::io
