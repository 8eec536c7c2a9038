#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "rebel/dynamics.hpp"
#include "rebel/equilibrium.hpp"
#include "rebel/graph.hpp"
#include "rebel/oracle.hpp"

namespace rebel {

enum class Algorithm { alg1, alg2, alg4, alg5, brute };

// Accepts alg1|alg2|alg4|alg5|brute. Throws InvalidInput otherwise.
Algorithm parse_algorithm(std::string_view name);
std::string_view algorithm_name(Algorithm alg);

struct RunResult {
  Algorithm algorithm = Algorithm::alg1;
  Schedule schedule;
  Outcome outcome;
  bool regret_proof = false;
  // Guarantee the algorithm promises on this instance: a lower bound on the
  // count of `objective` decisions, plus regret-proofness for alg4/alg5.
  Decision objective = Decision::Y;
  std::size_t bound_required = 0;
  bool bound_met = false;
  double runtime_ms = 0.0;
  std::vector<TraceRow> trace;
  std::optional<OracleResult> oracle;  // brute only
};

// For brute the schedule is the first Y-optimal one, countY/countN are the
// two optima and regret_proof reports whether any schedule is regret-proof.
RunResult run_algorithm(const Graph& graph, Algorithm alg, bool timing = true);

std::size_t required_count(const Graph& graph, Algorithm alg);

}  // namespace rebel
