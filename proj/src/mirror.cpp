#include "rebel/mirror.hpp"

#include <string>

#include "rebel/error.hpp"

namespace rebel {

MirrorBuilder::MirrorBuilder(const Graph& graph) : graph_(graph) {
  const std::size_t n = graph.node_count();
  pair_.a = NodeSet(n);
  pair_.pi_prime = PartialSchedule(n);
  pair_.pi_double_prime = PartialSchedule(n);
  count_[0].assign(n, {});
  count_[1].assign(n, {});
  outside_.resize(n);
  for (NodeId v = 0; v < n; ++v) outside_[v] = graph.degree(v);
}

void MirrorBuilder::push(int which, NodeId v) {
  const Decision d = decide(count_[which][v].y, count_[which][v].n);
  (which == 0 ? pair_.pi_prime : pair_.pi_double_prime).push(v, d);
  for (NodeId u : graph_.neighbors(v)) ++(d == Decision::Y ? count_[which][u].y : count_[which][u].n);
}

void MirrorBuilder::schedule_node(NodeId w) {
  if (in_a(w)) throw ContractViolation("node " + std::to_string(w) + " already in A");
  push(0, w);
  push(1, w);
  pair_.a.insert(w);
  for (NodeId u : graph_.neighbors(w)) --outside_[u];
}

void MirrorBuilder::schedule_edge(NodeId u, NodeId v) {
  if (in_a(u) || in_a(v) || !graph_.adjacent(u, v))
    throw ContractViolation("edge " + std::to_string(u) + "-" + std::to_string(v) +
                            " is not an edge outside A");
  push(0, u);
  push(0, v);
  push(1, v);
  push(1, u);
  pair_.a.insert(u);
  pair_.a.insert(v);
  for (NodeId x : graph_.neighbors(u)) --outside_[x];
  for (NodeId x : graph_.neighbors(v)) --outside_[x];
}

void MirrorBuilder::grow(const std::function<bool(NodeId)>& node_eligible,
                         const std::function<bool(NodeId)>& edge_eligible) {
  const std::size_t n = graph_.node_count();
  for (;;) {
    bool scheduled = false;
    for (NodeId w = 0; w < n; ++w) {
      if (!in_a(w) && unbalanced(w) && node_eligible(w)) {
        schedule_node(w);
        scheduled = true;
        break;
      }
    }
    if (scheduled) continue;

    for (NodeId u = 0; u < n && !scheduled; ++u) {
      if (in_a(u) || outside_[u] == 0 || !edge_eligible(u)) continue;
      for (NodeId v : graph_.neighbors(u)) {
        if (!in_a(v) && edge_eligible(v)) {
          schedule_edge(u, v);
          scheduled = true;
          break;
        }
      }
    }
    if (!scheduled) return;
  }
}

MirrorPair run_algorithm1(const Graph& graph) {
  MirrorBuilder builder(graph);
  auto any = [](NodeId) { return true; };
  builder.grow(any, any);
  return builder.release();
}

bool mirror_property_holds(const Graph& graph, const MirrorPair& pair) {
  const auto& p1 = pair.pi_prime;
  const auto& p2 = pair.pi_double_prime;
  if (p1.scheduled() != pair.a || p2.scheduled() != pair.a) return false;
  if (!p1.consistent_with(graph) || !p2.consistent_with(graph)) return false;
  std::vector<Decision> first(graph.node_count(), Decision::Y);
  for (const auto& e : p1.entries()) first[e.node] = e.decision;
  for (const auto& e : p2.entries())
    if (first[e.node] == e.decision) return false;
  return true;
}

bool outside_set_settled(const Graph& graph, const MirrorPair& pair) {
  const std::size_t n = graph.node_count();
  for (int which = 0; which < 2; ++which) {
    std::vector<int> balance(n, 0);
    for (const auto& e : pair.mirror(which).entries())
      for (NodeId u : graph.neighbors(e.node)) balance[u] += e.decision == Decision::Y ? 1 : -1;
    for (NodeId v = 0; v < n; ++v) {
      if (pair.a.contains(v)) continue;
      if (balance[v] != 0) return false;
      for (NodeId u : graph.neighbors(v))
        if (!pair.a.contains(u)) return false;
    }
  }
  return true;
}

Schedule choose_and_extend(const Graph& graph, const MirrorPair& pair, Decision favoured) {
  const auto& chosen = pair.pi_double_prime.count(favoured) > pair.pi_prime.count(favoured)
                           ? pair.pi_double_prime
                           : pair.pi_prime;
  std::vector<NodeId> order = chosen.order();
  for (NodeId v = 0; v < graph.node_count(); ++v)
    if (!pair.a.contains(v)) order.push_back(v);
  return Schedule(std::move(order));
}

Schedule schedule_y(const Graph& graph) {
  require_schedulable(graph);
  Schedule schedule = choose_and_extend(graph, run_algorithm1(graph));
  const Outcome outcome = simulate(graph, schedule);
  if (2 * outcome.count_y < graph.node_count())
    throw ContractViolation("schedule_y produced " + std::to_string(outcome.count_y) +
                            " Y decisions on " + std::to_string(graph.node_count()) + " nodes");
  return schedule;
}

std::vector<NodeId> one_product_order(const Graph& graph, const Schedule& schedule) {
  const Outcome outcome = simulate(graph, schedule);
  std::vector<NodeId> buyers;
  for (NodeId v : schedule.order())
    if (outcome.decision[v] == Decision::Y) buyers.push_back(v);
  return buyers;
}

bool one_product_replay_ok(const Graph& graph, const std::vector<NodeId>& buyers) {
  NodeSet bought(graph.node_count());
  for (NodeId v : buyers) {
    if (bought.contains(v)) return false;
    std::size_t buying = 0;
    for (NodeId u : graph.neighbors(v))
      if (bought.contains(u)) ++buying;
    if (2 * buying > graph.degree(v)) return false;
    bought.insert(v);
  }
  return true;
}

}  // namespace rebel
