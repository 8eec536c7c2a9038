#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include "rebel/dynamics.hpp"
#include "rebel/graph.hpp"
#include "rebel/node_set.hpp"

namespace rebel {

// Two partial schedules over the same node set A whose decisions disagree on
// every node of A.
struct MirrorPair {
  NodeSet a;
  PartialSchedule pi_prime;
  PartialSchedule pi_double_prime;

  const PartialSchedule& mirror(int which) const { return which == 0 ? pi_prime : pi_double_prime; }
};

// Grows a MirrorPair one node or one edge at a time, keeping per-node
// decided-neighbor counts for both mirrors and the number of neighbors
// still outside A.
class MirrorBuilder {
 public:
  explicit MirrorBuilder(const Graph& graph);

  bool in_a(NodeId v) const { return pair_.a.contains(v); }
  // (#Y - #N) among decided neighbors under the given mirror.
  int balance(int which, NodeId v) const { return count_[which][v].y - count_[which][v].n; }
  bool unbalanced(NodeId v) const { return balance(0, v) != 0; }
  std::size_t outside_degree(NodeId v) const { return outside_[v]; }

  // Same position in both mirrors.
  void schedule_node(NodeId w);
  // u then v in pi', v then u in pi''.
  void schedule_edge(NodeId u, NodeId v);

  // Repeats the node step (lowest eligible unbalanced w outside A) until it
  // no longer applies, then one edge step (lexicographically smallest uv with
  // both ends outside A and edge-eligible), until neither applies.
  void grow(const std::function<bool(NodeId)>& node_eligible,
            const std::function<bool(NodeId)>& edge_eligible);

  const MirrorPair& pair() const { return pair_; }
  MirrorPair release() { return std::move(pair_); }

 private:
  struct Counts {
    int y = 0;
    int n = 0;
  };

  void push(int which, NodeId v);

  const Graph& graph_;
  MirrorPair pair_;
  std::array<std::vector<Counts>, 2> count_;
  std::vector<std::size_t> outside_;
};

MirrorPair run_algorithm1(const Graph& graph);

// Every node of A decides differently under the two mirrors, and both
// mirrors replay consistently under the rebel rule.
bool mirror_property_holds(const Graph& graph, const MirrorPair& pair);
// V \ A is independent and each of its nodes has balanced decided
// neighborhoods under both mirrors.
bool outside_set_settled(const Graph& graph, const MirrorPair& pair);

// The mirror with more decisions equal to `favoured` (tie: pi'), followed by
// V \ A in ascending order.
Schedule choose_and_extend(const Graph& graph, const MirrorPair& pair,
                           Decision favoured = Decision::Y);

// At least n/2 Y decisions. Throws ContractViolation if the guarantee fails.
Schedule schedule_y(const Graph& graph);

// Y-deciders of the schedule in schedule order.
std::vector<NodeId> one_product_order(const Graph& graph, const Schedule& schedule);
// True when every listed buyer, at their turn, has at most half of their
// neighbors already buying.
bool one_product_replay_ok(const Graph& graph, const std::vector<NodeId>& buyers);

}  // namespace rebel
