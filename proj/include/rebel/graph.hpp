#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rebel/node_set.hpp"

namespace rebel {

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

// Simple undirected graph in compressed adjacency form. Neighbor lists are
// sorted ascending. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  // Throws InvalidInput listing every self-loop, parallel edge and
  // out-of-range endpoint.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(NodeId u, NodeId v) const;

  // Every edge once with u < v, sorted.
  std::vector<Edge> edges() const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
};

struct ValidationReport {
  std::size_t n = 0;
  std::size_t m = 0;
  bool simple = true;
  bool symmetric = true;
  bool connected = false;
  std::vector<std::string> issues;

  // Downstream schedulers require all of these.
  bool ok() const { return simple && symmetric && connected && n >= 2; }
};

// Raw edge list check: self-loops, parallel edges, range, connectivity.
ValidationReport validate(std::size_t n, std::span<const Edge> edges);
ValidationReport validate(const Graph& graph);

bool is_connected(const Graph& graph);

// Throws InvalidInput unless the graph is connected with n >= 2.
void require_schedulable(const Graph& graph);

}  // namespace rebel
