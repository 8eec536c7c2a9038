#pragma once

#include <cstddef>

#include "rebel/graph.hpp"
#include "rebel/node_set.hpp"

namespace rebel {

// Ascending-id greedy scan: add v when none of its neighbors was added.
// Always independent and maximal.
NodeSet greedy_maximal_independent_set(const Graph& graph);

bool is_independent(const Graph& graph, const NodeSet& set);
// Independent, and every node outside has a neighbor inside.
bool is_maximal_independent(const Graph& graph, const NodeSet& set);

inline constexpr std::size_t kDefaultExactMisBound = 60;

struct MaxIndependentSet {
  NodeSet set;
  std::size_t alpha = 0;
};

// Branch and bound with low-degree reductions and a clique-cover bound.
// Throws InstanceTooLarge when n > max_nodes.
MaxIndependentSet exact_max_independent_set(const Graph& graph,
                                            std::size_t max_nodes = kDefaultExactMisBound);

}  // namespace rebel
