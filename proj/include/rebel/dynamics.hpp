#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rebel/cut.hpp"
#include "rebel/graph.hpp"
#include "rebel/node_set.hpp"

namespace rebel {

enum class Decision : std::uint8_t { Y, N };

constexpr char to_char(Decision d) { return d == Decision::Y ? 'Y' : 'N'; }
constexpr Decision flipped(Decision d) { return d == Decision::Y ? Decision::N : Decision::Y; }

// The rebel rule over already-decided neighbors: take the minority product,
// Y on a tie (including no decided neighbors at all).
constexpr Decision decide(std::size_t y_neighbors, std::size_t n_neighbors) {
  return y_neighbors > n_neighbors ? Decision::N : Decision::Y;
}

// A total order of the nodes: order[position] and its inverse.
class Schedule {
 public:
  Schedule() = default;
  // Throws InvalidInput unless order is a permutation of [0, order.size()).
  explicit Schedule(std::vector<NodeId> order);

  static Schedule identity(std::size_t n);

  std::size_t size() const { return order_.size(); }
  std::span<const NodeId> order() const { return order_; }
  NodeId at(std::size_t position) const { return order_[position]; }
  std::size_t position_of(NodeId v) const { return position_[v]; }

  bool operator==(const Schedule& other) const { return order_ == other.order_; }

 private:
  std::vector<NodeId> order_;
  std::vector<std::size_t> position_;
};

// A decided prefix: (node, decision) pairs in scheduling order.
class PartialSchedule {
 public:
  struct Entry {
    NodeId node;
    Decision decision;
    bool operator==(const Entry&) const = default;
  };

  PartialSchedule() = default;
  explicit PartialSchedule(std::size_t n) : scheduled_(n) {}

  // Throws ContractViolation when v is already scheduled.
  void push(NodeId v, Decision d);

  std::size_t size() const { return entries_.size(); }
  std::size_t universe() const { return scheduled_.universe(); }
  std::span<const Entry> entries() const { return entries_; }
  bool contains(NodeId v) const { return scheduled_.contains(v); }
  const NodeSet& scheduled() const { return scheduled_; }
  std::size_t count(Decision d) const;
  std::vector<NodeId> order() const;

  // True when replaying the prefix under the rebel rule reproduces every
  // recorded decision. O(n + m).
  bool consistent_with(const Graph& graph) const;

 private:
  std::vector<Entry> entries_;
  NodeSet scheduled_;
};

struct Outcome {
  std::vector<Decision> decision;
  std::size_t count_y = 0;
  std::size_t count_n = 0;

  bool operator==(const Outcome&) const = default;
};

Outcome simulate(const Graph& graph, const Schedule& schedule);
// Decisions of the nodes in order, which may cover only part of the graph.
PartialSchedule simulate_prefix(const Graph& graph, std::span<const NodeId> order);

// [S1, S2] with S1 the Y-deciders.
Cut associated_cut(const Graph& graph, const Outcome& outcome);

// Regret-proof iff the associated cut is stable; violators for diagnostics.
StabilityReport is_regret_proof(const Graph& graph, const Schedule& schedule);

// Schedule file: one node label per line, in order.
Schedule read_schedule(std::istream& in, std::span<const std::string> labels);
void write_schedule(std::ostream& out, const Schedule& schedule,
                    std::span<const std::string> labels);
// node,position,decision with 1-based positions.
void write_outcome_csv(std::ostream& out, const Schedule& schedule, const Outcome& outcome,
                       std::span<const std::string> labels);

}  // namespace rebel
