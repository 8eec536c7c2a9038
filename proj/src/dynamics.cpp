#include "rebel/dynamics.hpp"

#include <istream>
#include <ostream>
#include <unordered_map>

#include "rebel/error.hpp"

namespace rebel {

Schedule::Schedule(std::vector<NodeId> order) : order_(std::move(order)) {
  const std::size_t n = order_.size();
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  position_.assign(n, kUnset);
  for (std::size_t i = 0; i < n; ++i) {
    NodeId v = order_[i];
    if (v >= n)
      throw InvalidInput("schedule entry " + std::to_string(v) + " out of range for " +
                         std::to_string(n) + " nodes");
    if (position_[v] != kUnset)
      throw InvalidInput("schedule lists node " + std::to_string(v) + " twice");
    position_[v] = i;
  }
}

Schedule Schedule::identity(std::size_t n) {
  std::vector<NodeId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<NodeId>(i);
  return Schedule(std::move(order));
}

void PartialSchedule::push(NodeId v, Decision d) {
  if (scheduled_.contains(v))
    throw ContractViolation("partial schedule already contains node " + std::to_string(v));
  scheduled_.insert(v);
  entries_.push_back({v, d});
}

std::size_t PartialSchedule::count(Decision d) const {
  std::size_t c = 0;
  for (const auto& e : entries_)
    if (e.decision == d) ++c;
  return c;
}

std::vector<NodeId> PartialSchedule::order() const {
  std::vector<NodeId> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.node);
  return out;
}

bool PartialSchedule::consistent_with(const Graph& graph) const {
  PartialSchedule replay = simulate_prefix(graph, order());
  return replay.entries_ == entries_;
}

PartialSchedule simulate_prefix(const Graph& graph, std::span<const NodeId> order) {
  const std::size_t n = graph.node_count();
  PartialSchedule out(n);
  std::vector<std::size_t> y(n, 0), no(n, 0);
  for (NodeId v : order) {
    Decision d = decide(y[v], no[v]);
    out.push(v, d);
    for (NodeId u : graph.neighbors(v)) ++(d == Decision::Y ? y[u] : no[u]);
  }
  return out;
}

Outcome simulate(const Graph& graph, const Schedule& schedule) {
  if (schedule.size() != graph.node_count())
    throw InvalidInput("schedule has " + std::to_string(schedule.size()) + " nodes, graph has " +
                       std::to_string(graph.node_count()));
  const std::size_t n = graph.node_count();
  Outcome outcome;
  outcome.decision.assign(n, Decision::Y);
  std::vector<std::size_t> y(n, 0), no(n, 0);
  for (NodeId v : schedule.order()) {
    Decision d = decide(y[v], no[v]);
    outcome.decision[v] = d;
    ++(d == Decision::Y ? outcome.count_y : outcome.count_n);
    for (NodeId u : graph.neighbors(v)) ++(d == Decision::Y ? y[u] : no[u]);
  }
  return outcome;
}

Cut associated_cut(const Graph& graph, const Outcome& outcome) {
  std::vector<Side> sides(outcome.decision.size());
  for (std::size_t v = 0; v < sides.size(); ++v)
    sides[v] = outcome.decision[v] == Decision::Y ? Side::s1 : Side::s2;
  return Cut::from_sides(graph, std::move(sides));
}

StabilityReport is_regret_proof(const Graph& graph, const Schedule& schedule) {
  return is_stable(graph, associated_cut(graph, simulate(graph, schedule)));
}

Schedule read_schedule(std::istream& in, std::span<const std::string> labels) {
  std::unordered_map<std::string, NodeId> index;
  for (std::size_t v = 0; v < labels.size(); ++v) index.emplace(labels[v], static_cast<NodeId>(v));
  std::vector<NodeId> order;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string label = line.substr(first, last - first + 1);
    auto it = index.find(label);
    if (it == index.end())
      throw InvalidInput("schedule line " + std::to_string(line_no) + ": unknown node '" + label + "'");
    order.push_back(it->second);
  }
  if (order.size() != labels.size())
    throw InvalidInput("schedule lists " + std::to_string(order.size()) + " nodes, graph has " +
                       std::to_string(labels.size()));
  return Schedule(std::move(order));
}

void write_schedule(std::ostream& out, const Schedule& schedule,
                    std::span<const std::string> labels) {
  for (NodeId v : schedule.order()) out << labels[v] << '\n';
}

void write_outcome_csv(std::ostream& out, const Schedule& schedule, const Outcome& outcome,
                       std::span<const std::string> labels) {
  out << "node,position,decision\n";
  for (NodeId v = 0; v < outcome.decision.size(); ++v)
    out << labels[v] << ',' << schedule.position_of(v) + 1 << ',' << to_char(outcome.decision[v])
        << '\n';
}

}  // namespace rebel
