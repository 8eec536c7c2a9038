#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "rebel/graph.hpp"

namespace rebel {

// Edge list as read from disk, before simplicity checks.
struct RawEdgeList {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;  // labels[id]
};

// A graph plus the label of every dense id.
struct LabelledGraph {
  Graph graph;
  std::vector<std::string> labels;

  std::unordered_map<std::string, NodeId> label_index() const;
};

// Edge-list format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment. When every label is an integer in [0, n) the ids
// are the labels; otherwise ids follow first appearance.
RawEdgeList parse_edge_list(std::istream& in);
LabelledGraph load_graph(std::istream& in);
LabelledGraph load_graph(const std::filesystem::path& path);

// Canonical form: "n m" then sorted "u v" with u < v.
void write_edge_list(std::ostream& out, const Graph& graph);

std::vector<std::string> identity_labels(std::size_t n);

}  // namespace rebel
