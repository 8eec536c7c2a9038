#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "rebel/cut.hpp"
#include "rebel/dynamics.hpp"
#include "rebel/graph.hpp"
#include "rebel/node_set.hpp"

namespace rebel {

struct GreedyPassResult {
  PartialSchedule partial;
  NodeSet t1;      // scheduled from S1, all Y
  NodeSet t2;      // scheduled from S2, all N
  NodeSet s1_rem;  // S1 \ T1
  NodeSet s2_rem;  // S2 \ T2
};

// Schedules an unscheduled node whenever its rebel decision matches its
// side's target (S1: Y, S2: N), rescanning from the lowest id after each one,
// until a full scan schedules nothing.
GreedyPassResult greedy_pass(const Graph& graph, const Cut& cut);

// [S1', S2'] recombined as [S1' u T2, S2' u T1].
Cut recombine(const Graph& graph, const GreedyPassResult& pass);

// S2 = greedy maximal independent set, S1 = the rest.
Cut default_initial_cut(const Graph& graph);

struct TraceRow {
  std::size_t iter = 0;
  std::size_t cut_size = 0;
  std::size_t s1 = 0;
  std::size_t s2 = 0;
  std::size_t moves_type1 = 0;
  std::size_t moves_type2 = 0;
};

struct EquilibriumResult {
  Schedule schedule;
  Cut final_cut;  // associated cut of the output schedule
  std::vector<TraceRow> trace;
  std::size_t iterations = 0;
  // Moves of the last stabilization (algorithm5 only): every move is type 2
  // and the moved nodes form an independent set.
  std::size_t last_type1_moves = 0;
  NodeSet last_moved;
  bool last_moved_independent = true;
};

// Regret-proof with at least n/2 Y decisions.
EquilibriumResult algorithm4(const Graph& graph, const Cut& initial);
EquilibriumResult algorithm4(const Graph& graph);

// Regret-proof with at least max(sqrt(n+1) - 1, (n - alpha)/2) N decisions.
EquilibriumResult algorithm5(const Graph& graph, const Cut& initial);
EquilibriumResult algorithm5(const Graph& graph);

// Integer forms of the guarantees: ceil(sqrt(n+1) - 1) and ceil((n - alpha)/2).
std::size_t sqrt_bound(std::size_t n);
std::size_t independence_bound(std::size_t n, std::size_t alpha);
std::size_t algorithm5_bound(std::size_t n, std::optional<std::size_t> alpha);

// iter,cut_size,s1,s2,moves_type1,moves_type2
void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace);

}  // namespace rebel
