#include "rebel/independent_set.hpp"

#include <string>
#include <vector>

#include "rebel/error.hpp"

namespace rebel {

NodeSet greedy_maximal_independent_set(const Graph& graph) {
  const std::size_t n = graph.node_count();
  NodeSet set(n);
  std::vector<char> blocked(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    if (blocked[v]) continue;
    set.insert(v);
    for (NodeId u : graph.neighbors(v)) blocked[u] = 1;
  }
  return set;
}

bool is_independent(const Graph& graph, const NodeSet& set) {
  for (NodeId v : set.members())
    for (NodeId u : graph.neighbors(v))
      if (set.contains(u)) return false;
  return true;
}

bool is_maximal_independent(const Graph& graph, const NodeSet& set) {
  if (!is_independent(graph, set)) return false;
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    if (set.contains(v)) continue;
    bool dominated = false;
    for (NodeId u : graph.neighbors(v)) dominated = dominated || set.contains(u);
    if (!dominated) return false;
  }
  return true;
}

namespace {

class MisSearch {
 public:
  explicit MisSearch(const Graph& graph) : n_(graph.node_count()) {
    adj_.reserve(n_);
    closed_.reserve(n_);
    for (NodeId v = 0; v < n_; ++v) {
      NodeSet nb(n_);
      for (NodeId u : graph.neighbors(v)) nb.insert(u);
      adj_.push_back(nb);
      nb.insert(v);
      closed_.push_back(std::move(nb));
    }
  }

  MaxIndependentSet run() {
    best_ = std::vector<NodeId>{};
    search(NodeSet::full(n_), {});
    MaxIndependentSet out{NodeSet::of(n_, best_), best_.size()};
    return out;
  }

 private:
  // Greedy clique partition of cand; an upper bound on alpha(G[cand]).
  std::size_t clique_cover(NodeSet cand) const {
    std::size_t cliques = 0;
    while (!cand.empty()) {
      NodeId v = cand.members().front();
      NodeSet grow = cand & adj_[v];
      cand.erase(v);
      while (!grow.empty()) {
        NodeId w = grow.members().front();
        cand.erase(w);
        grow &= adj_[w];
      }
      ++cliques;
    }
    return cliques;
  }

  void search(NodeSet cand, std::vector<NodeId> current) {
    for (;;) {
      if (current.size() + cand.size() <= best_.size()) return;
      bool reduced = false;
      for (NodeId v : cand.members()) {
        if ((adj_[v] & cand).size() <= 1) {
          current.push_back(v);
          cand -= closed_[v];
          reduced = true;
          break;
        }
      }
      if (!reduced) break;
    }
    if (cand.empty()) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + clique_cover(cand) <= best_.size()) return;

    NodeId pivot = 0;
    std::size_t pivot_degree = 0;
    for (NodeId v : cand.members()) {
      std::size_t d = (adj_[v] & cand).size();
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    std::vector<NodeId> with = current;
    with.push_back(pivot);
    search(cand - closed_[pivot], std::move(with));
    cand.erase(pivot);
    search(std::move(cand), std::move(current));
  }

  std::size_t n_;
  std::vector<NodeSet> adj_;
  std::vector<NodeSet> closed_;
  std::vector<NodeId> best_;
};

}  // namespace

MaxIndependentSet exact_max_independent_set(const Graph& graph, std::size_t max_nodes) {
  if (graph.node_count() > max_nodes)
    throw InstanceTooLarge("exact maximum independent set limited to " + std::to_string(max_nodes) +
                           " nodes, graph has " + std::to_string(graph.node_count()));
  return MisSearch(graph).run();
}

}  // namespace rebel
