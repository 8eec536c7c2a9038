#include "rebel/graph.hpp"

#include <algorithm>
#include <sstream>

#include "rebel/error.hpp"

namespace rebel {

namespace {

std::vector<std::string> structural_issues(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::string> issues;
  std::vector<Edge> seen;
  seen.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    std::ostringstream msg;
    if (e.u >= n || e.v >= n) {
      msg << "edge " << i << " (" << e.u << "," << e.v << "): endpoint out of range [0," << n << ")";
      issues.push_back(msg.str());
      continue;
    }
    if (e.u == e.v) {
      msg << "edge " << i << " (" << e.u << "," << e.v << "): self-loop at node " << e.u;
      issues.push_back(msg.str());
      continue;
    }
    seen.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i] == seen[i - 1] && (i < 2 || seen[i - 2] != seen[i])) {
      std::ostringstream msg;
      msg << "parallel edge between nodes " << seen[i].u << " and " << seen[i].v;
      issues.push_back(msg.str());
    }
  }
  return issues;
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  auto issues = structural_issues(n, edges);
  if (!issues.empty()) {
    std::string what = "invalid graph:";
    for (const auto& s : issues) what += "\n  " + s;
    throw InvalidInput(what);
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  return g;
}

bool Graph::adjacent(NodeId u, NodeId v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u)
    for (NodeId v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

bool is_connected(const Graph& graph) {
  const std::size_t n = graph.node_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : graph.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n;
}

ValidationReport validate(std::size_t n, std::span<const Edge> edges) {
  ValidationReport report;
  report.n = n;
  report.m = edges.size();
  report.issues = structural_issues(n, edges);
  for (const auto& issue : report.issues) {
    if (issue.find("parallel") != std::string::npos || issue.find("self-loop") != std::string::npos)
      report.simple = false;
    if (issue.find("out of range") != std::string::npos) report.symmetric = false;
  }
  if (!report.issues.empty()) return report;
  Graph g = Graph::from_edges(n, edges);
  return validate(g);
}

ValidationReport validate(const Graph& graph) {
  ValidationReport report;
  report.n = graph.node_count();
  report.m = graph.edge_count();
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < report.n; ++v) {
    degree_sum += graph.degree(v);
    NodeId prev = v;
    bool first = true;
    for (NodeId u : graph.neighbors(v)) {
      if (u == v) {
        report.simple = false;
        report.issues.push_back("self-loop at node " + std::to_string(v));
      }
      if (!first && u == prev) {
        report.simple = false;
        report.issues.push_back("parallel edge between nodes " + std::to_string(v) + " and " +
                                std::to_string(u));
      }
      if (!graph.adjacent(u, v)) {
        report.symmetric = false;
        report.issues.push_back("asymmetric adjacency " + std::to_string(v) + "->" +
                                std::to_string(u));
      }
      prev = u;
      first = false;
    }
  }
  if (degree_sum != 2 * report.m) {
    report.symmetric = false;
    report.issues.push_back("degree sum differs from 2m");
  }
  if (report.n < 2) report.issues.push_back("fewer than two nodes");
  report.connected = is_connected(graph);
  if (!report.connected && report.n > 0) report.issues.push_back("graph is disconnected");
  return report;
}

void require_schedulable(const Graph& graph) {
  auto report = validate(graph);
  if (!report.ok()) {
    std::string what = "graph not schedulable:";
    for (const auto& s : report.issues) what += " " + s + ";";
    throw InvalidInput(what);
  }
}

}  // namespace rebel
