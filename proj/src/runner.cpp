#include "rebel/runner.hpp"

#include <chrono>
#include <string>

#include "rebel/error.hpp"
#include "rebel/independent_set.hpp"
#include "rebel/mirror.hpp"
#include "rebel/peeling.hpp"

namespace rebel {

Algorithm parse_algorithm(std::string_view name) {
  if (name == "alg1") return Algorithm::alg1;
  if (name == "alg2") return Algorithm::alg2;
  if (name == "alg4") return Algorithm::alg4;
  if (name == "alg5") return Algorithm::alg5;
  if (name == "brute") return Algorithm::brute;
  throw InvalidInput("unknown algorithm '" + std::string(name) +
                     "' (expected alg1, alg2, alg4, alg5 or brute)");
}

std::string_view algorithm_name(Algorithm alg) {
  switch (alg) {
    case Algorithm::alg1: return "alg1";
    case Algorithm::alg2: return "alg2";
    case Algorithm::alg4: return "alg4";
    case Algorithm::alg5: return "alg5";
    case Algorithm::brute: return "brute";
  }
  return "?";
}

std::size_t required_count(const Graph& graph, Algorithm alg) {
  const std::size_t n = graph.node_count();
  switch (alg) {
    case Algorithm::alg1:
    case Algorithm::alg4: return (n + 1) / 2;
    case Algorithm::alg2: return (n + 2) / 3;
    case Algorithm::alg5: {
      std::optional<std::size_t> alpha;
      if (n <= kDefaultExactMisBound) alpha = exact_max_independent_set(graph).alpha;
      return algorithm5_bound(n, alpha);
    }
    case Algorithm::brute: return 0;
  }
  return 0;
}

RunResult run_algorithm(const Graph& graph, Algorithm alg, bool timing) {
  RunResult r;
  r.algorithm = alg;
  r.objective = alg == Algorithm::alg2 || alg == Algorithm::alg5 ? Decision::N : Decision::Y;
  r.bound_required = required_count(graph, alg);

  const auto start = std::chrono::steady_clock::now();
  switch (alg) {
    case Algorithm::alg1: r.schedule = schedule_y(graph); break;
    case Algorithm::alg2: r.schedule = schedule_n(graph); break;
    case Algorithm::alg4: {
      EquilibriumResult e = algorithm4(graph);
      r.schedule = std::move(e.schedule);
      r.trace = std::move(e.trace);
      break;
    }
    case Algorithm::alg5: {
      EquilibriumResult e = algorithm5(graph);
      r.schedule = std::move(e.schedule);
      r.trace = std::move(e.trace);
      break;
    }
    case Algorithm::brute: {
      r.oracle = brute_force(graph);
      r.schedule = r.oracle->argmax_y;
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  if (timing) r.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();

  r.outcome = simulate(graph, r.schedule);
  if (alg == Algorithm::brute) {
    r.outcome.count_y = r.oracle->opt_y;
    r.outcome.count_n = r.oracle->opt_n;
    r.regret_proof = r.oracle->regret_proof_exists;
    r.bound_met = true;
    return r;
  }
  r.regret_proof = is_regret_proof(graph, r.schedule).stable;
  const std::size_t achieved = r.objective == Decision::Y ? r.outcome.count_y : r.outcome.count_n;
  r.bound_met = achieved >= r.bound_required;
  if (alg == Algorithm::alg4 || alg == Algorithm::alg5) r.bound_met = r.bound_met && r.regret_proof;
  return r;
}

}  // namespace rebel
