#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "rebel/dynamics.hpp"
#include "rebel/graph.hpp"
#include "rebel/mirror.hpp"
#include "rebel/node_set.hpp"

namespace rebel {

enum class LayerSide : std::uint8_t { x, y };

struct LayerSlot {
  std::size_t layer = 0;
  LayerSide side = LayerSide::y;
};

// Layers X_1..X_l of a maximal independent set X and Y_0..Y_l of V \ X.
// G_i is the subgraph induced by all nodes of layer >= i.
struct PeelingDecomposition {
  std::size_t levels = 0;     // l
  std::vector<NodeSet> x;     // x[0] is empty
  std::vector<NodeSet> y;
  NodeSet base_x;
  std::vector<LayerSlot> layer_of;

  std::size_t layer(NodeId v) const { return layer_of[v].layer; }
};

// Stage i removes non-critical Y-nodes (no pendant X-neighbor left) in
// ascending id into Y_i; then X_{i+1} is the set of pendant X-nodes, which
// are removed too. Stops once X is exhausted. Throws InvalidInput unless x is
// a maximal independent set.
PeelingDecomposition peel(const Graph& graph, const NodeSet& x);

// Partition of V, and for i >= 1: X_i pendant in G_i and Y_i dominated by X_i.
// Returns one message per breach; empty when all hold.
std::vector<std::string> verify_decomposition(const Graph& graph, const PeelingDecomposition& d);

struct Algorithm2Result {
  MirrorPair pair;
  // 0 for pi', 1 for pi''.
  int chosen = 0;
};

// Mirror growth for i = l down to 0, with node steps limited to X_i u Y_i
// and edge steps to G_i. The chosen mirror has the most N (tie: pi').
Algorithm2Result run_algorithm2(const Graph& graph, const PeelingDecomposition& d);

struct ScheduleNResult {
  Schedule schedule;
  PeelingDecomposition decomposition;
  NodeSet a;
  bool mirror_branch = false;  // 3|A| > 2n
};

ScheduleNResult schedule_n_detailed(const Graph& graph);
// At least n/3 N decisions. Throws ContractViolation if the guarantee fails.
Schedule schedule_n(const Graph& graph);

// node,layer,side
void write_decomposition_csv(std::ostream& out, const PeelingDecomposition& d);

}  // namespace rebel
