#include "rebel/peeling.hpp"

#include <ostream>

#include "rebel/error.hpp"
#include "rebel/independent_set.hpp"

namespace rebel {

namespace {

class Peeler {
 public:
  Peeler(const Graph& graph, const NodeSet& x)
      : graph_(graph),
        n_(graph.node_count()),
        is_x_(x),
        alive_(NodeSet::full(graph.node_count())),
        deg_(n_),
        pendant_x_neighbors_(n_, 0) {
    for (NodeId v = 0; v < n_; ++v) deg_[v] = graph.degree(v);
    for (NodeId v : x.members())
      if (deg_[v] == 1) ++pendant_x_neighbors_[graph.neighbors(v)[0]];
  }

  PeelingDecomposition run() {
    PeelingDecomposition d;
    d.base_x = is_x_;
    d.layer_of.assign(n_, {});
    d.x.push_back(NodeSet(n_));
    std::size_t x_alive = is_x_.size();
    for (std::size_t stage = 0;; ++stage) {
      if (stage > n_) throw IterationCapExceeded("peeling exceeded " + std::to_string(n_) + " stages");
      d.y.push_back(NodeSet(n_));
      for (NodeId v = 0; v < n_; ++v) {
        if (!alive_.contains(v) || is_x_.contains(v) || pendant_x_neighbors_[v] > 0) continue;
        d.y[stage].insert(v);
        d.layer_of[v] = {stage, LayerSide::y};
        remove_y(v);
      }
      if (x_alive == 0) {
        d.levels = stage;
        return d;
      }
      NodeSet next(n_);
      for (NodeId v : is_x_.members())
        if (alive_.contains(v) && deg_[v] == 1) next.insert(v);
      if (next.empty()) throw ContractViolation("peeling found no pendant X-node");
      for (NodeId v : next.members()) {
        d.layer_of[v] = {stage + 1, LayerSide::x};
        remove_x(v);
        --x_alive;
      }
      d.x.push_back(std::move(next));
    }
  }

 private:
  NodeId sole_alive_neighbor(NodeId v) const {
    for (NodeId u : graph_.neighbors(v))
      if (alive_.contains(u)) return u;
    throw ContractViolation("node " + std::to_string(v) + " has no alive neighbor");
  }

  void remove_y(NodeId v) {
    alive_.erase(v);
    for (NodeId u : graph_.neighbors(v)) {
      if (!alive_.contains(u)) continue;
      --deg_[u];
      if (is_x_.contains(u) && deg_[u] == 1) ++pendant_x_neighbors_[sole_alive_neighbor(u)];
    }
  }

  void remove_x(NodeId v) {
    --pendant_x_neighbors_[sole_alive_neighbor(v)];
    alive_.erase(v);
    for (NodeId u : graph_.neighbors(v))
      if (alive_.contains(u)) --deg_[u];
  }

  const Graph& graph_;
  std::size_t n_;
  NodeSet is_x_;
  NodeSet alive_;
  std::vector<std::size_t> deg_;
  std::vector<std::size_t> pendant_x_neighbors_;
};

}  // namespace

PeelingDecomposition peel(const Graph& graph, const NodeSet& x) {
  if (x.universe() != graph.node_count() || !is_maximal_independent(graph, x))
    throw InvalidInput("peeling requires a maximal independent set of the graph");
  require_schedulable(graph);
  return Peeler(graph, x).run();
}

std::vector<std::string> verify_decomposition(const Graph& graph, const PeelingDecomposition& d) {
  std::vector<std::string> issues;
  const std::size_t n = graph.node_count();
  std::vector<int> hits(n, 0);
  for (const auto& s : d.x)
    for (NodeId v : s.members()) ++hits[v];
  for (const auto& s : d.y)
    for (NodeId v : s.members()) ++hits[v];
  for (NodeId v = 0; v < n; ++v) {
    if (hits[v] != 1) issues.push_back("node " + std::to_string(v) + " lies in " +
                                       std::to_string(hits[v]) + " layers");
    const bool in_x = d.base_x.contains(v);
    if (in_x != (d.layer_of[v].side == LayerSide::x))
      issues.push_back("node " + std::to_string(v) + " has the wrong side");
  }
  if (!d.x.empty() && !d.x[0].empty()) issues.push_back("X_0 is not empty");

  for (std::size_t i = 1; i <= d.levels && i < d.x.size(); ++i) {
    for (NodeId v : d.x[i].members()) {
      std::size_t deg = 0;
      for (NodeId u : graph.neighbors(v))
        if (d.layer(u) >= i) ++deg;
      if (deg != 1)
        issues.push_back("X-node " + std::to_string(v) + " has degree " + std::to_string(deg) +
                         " in G_" + std::to_string(i));
    }
    for (NodeId v : d.y[i].members()) {
      bool dominated = false;
      for (NodeId u : graph.neighbors(v)) dominated = dominated || d.x[i].contains(u);
      if (!dominated)
        issues.push_back("Y-node " + std::to_string(v) + " has no neighbor in X_" + std::to_string(i));
    }
  }
  return issues;
}

Algorithm2Result run_algorithm2(const Graph& graph, const PeelingDecomposition& d) {
  MirrorBuilder builder(graph);
  for (std::size_t i = d.levels + 1; i-- > 0;) {
    builder.grow([&](NodeId w) { return d.layer(w) == i; },
                 [&](NodeId w) { return d.layer(w) >= i; });
  }
  Algorithm2Result result;
  result.pair = builder.release();
  result.chosen = result.pair.pi_double_prime.count(Decision::N) >
                          result.pair.pi_prime.count(Decision::N)
                      ? 1
                      : 0;
  return result;
}

ScheduleNResult schedule_n_detailed(const Graph& graph) {
  require_schedulable(graph);
  const std::size_t n = graph.node_count();
  ScheduleNResult out;
  out.decomposition = peel(graph, greedy_maximal_independent_set(graph));
  Algorithm2Result alg2 = run_algorithm2(graph, out.decomposition);
  out.a = alg2.pair.a;

  for (NodeId v = 0; v < n; ++v)
    if (!out.a.contains(v) && !(out.decomposition.layer(v) == 0 &&
                                out.decomposition.layer_of[v].side == LayerSide::y))
      throw ContractViolation("node " + std::to_string(v) + " outside A is not in Y_0");

  std::vector<NodeId> order;
  order.reserve(n);
  out.mirror_branch = 3 * out.a.size() > 2 * n;
  if (out.mirror_branch) {
    order = alg2.pair.mirror(alg2.chosen).order();
    for (NodeId v = 0; v < n; ++v)
      if (!out.a.contains(v)) order.push_back(v);
  } else {
    const NodeSet& x = out.decomposition.base_x;
    for (NodeId v : x.members()) order.push_back(v);
    for (NodeId v = 0; v < n; ++v)
      if (!out.a.contains(v)) order.push_back(v);
    for (NodeId v : (out.a - x).members()) order.push_back(v);
  }
  out.schedule = Schedule(std::move(order));

  const Outcome outcome = simulate(graph, out.schedule);
  if (3 * outcome.count_n < n)
    throw ContractViolation("schedule_n produced " + std::to_string(outcome.count_n) +
                            " N decisions on " + std::to_string(n) + " nodes");
  return out;
}

Schedule schedule_n(const Graph& graph) { return schedule_n_detailed(graph).schedule; }

void write_decomposition_csv(std::ostream& out, const PeelingDecomposition& d) {
  out << "node,layer,side\n";
  for (NodeId v = 0; v < d.layer_of.size(); ++v)
    out << v << ',' << d.layer_of[v].layer << ','
        << (d.layer_of[v].side == LayerSide::x ? 'X' : 'Y') << '\n';
}

}  // namespace rebel
