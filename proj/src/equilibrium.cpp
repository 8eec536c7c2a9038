#include "rebel/equilibrium.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "rebel/error.hpp"
#include "rebel/independent_set.hpp"

namespace rebel {

GreedyPassResult greedy_pass(const Graph& graph, const Cut& cut) {
  const std::size_t n = graph.node_count();
  GreedyPassResult r{PartialSchedule(n), NodeSet(n), NodeSet(n), NodeSet(n), NodeSet(n)};
  std::vector<std::size_t> y(n, 0), no(n, 0);
  NodeId v = 0;
  while (v < n) {
    if (!r.partial.contains(v)) {
      const Decision d = decide(y[v], no[v]);
      const Decision target = cut.side(v) == Side::s1 ? Decision::Y : Decision::N;
      if (d == target) {
        r.partial.push(v, d);
        (d == Decision::Y ? r.t1 : r.t2).insert(v);
        for (NodeId u : graph.neighbors(v)) ++(d == Decision::Y ? y[u] : no[u]);
        v = 0;
        continue;
      }
    }
    ++v;
  }
  for (NodeId u = 0; u < n; ++u) {
    if (r.partial.contains(u)) continue;
    (cut.side(u) == Side::s1 ? r.s1_rem : r.s2_rem).insert(u);
  }
  return r;
}

Cut recombine(const Graph& graph, const GreedyPassResult& pass) {
  return Cut::from_leading_set(graph, pass.s1_rem | pass.t2);
}

Cut default_initial_cut(const Graph& graph) {
  return Cut::from_leading_set(graph, greedy_maximal_independent_set(graph).complement());
}

namespace {

TraceRow row(std::size_t iter, const Cut& cut, const MoveLog& log) {
  return {iter, cut.size(), cut.s1_count(), cut.s2_count(), log.type1_count, log.type2_count};
}

void check_recombination(const Cut& before, const Cut& after) {
  if (after.size() <= before.size())
    throw ContractViolation("recombined cut has size " + std::to_string(after.size()) +
                            ", not above " + std::to_string(before.size()));
}

void check_complete(const GreedyPassResult& pass) {
  if (!pass.s2_rem.empty())
    throw ContractViolation("greedy pass left S2 nodes unscheduled with S1 exhausted");
}

}  // namespace

EquilibriumResult algorithm4(const Graph& graph, const Cut& initial) {
  require_schedulable(graph);
  if (initial.node_count() != graph.node_count())
    throw InvalidInput("initial cut does not cover the graph");
  const std::size_t cap = graph.edge_count() + 1;
  EquilibriumResult result;
  Cut input = initial;
  for (std::size_t iter = 1;; ++iter) {
    if (iter > cap) throw IterationCapExceeded("algorithm4 exceeded " + std::to_string(cap) + " rounds");
    StabilizeResult stable = procedure2(graph, std::move(input));
    result.trace.push_back(row(iter, stable.cut, stable.log));
    GreedyPassResult pass = greedy_pass(graph, stable.cut);
    result.iterations = iter;
    if (pass.s1_rem.empty()) {
      check_complete(pass);
      result.schedule = Schedule(pass.partial.order());
      result.final_cut = std::move(stable.cut);
      return result;
    }
    input = recombine(graph, pass);
    check_recombination(stable.cut, input);
  }
}

EquilibriumResult algorithm4(const Graph& graph) {
  return algorithm4(graph, default_initial_cut(graph));
}

EquilibriumResult algorithm5(const Graph& graph, const Cut& initial) {
  require_schedulable(graph);
  if (initial.node_count() != graph.node_count())
    throw InvalidInput("initial cut does not cover the graph");
  const std::size_t outer_cap = graph.edge_count() + 2;
  const std::size_t inner_cap = graph.edge_count() + 1;
  EquilibriumResult result;
  std::optional<Schedule> best;
  std::size_t best_n = 0;
  std::size_t s = 0;
  Cut cut = initial;
  std::size_t iter = 0;
  for (std::size_t outer = 1;; ++outer) {
    if (outer > outer_cap)
      throw IterationCapExceeded("algorithm5 exceeded " + std::to_string(outer_cap) + " outer rounds");
    const std::size_t r = s;
    cut = cut.swapped();
    GreedyPassResult pass;
    MoveLog last_log;
    for (std::size_t inner = 1;; ++inner) {
      if (inner > inner_cap)
        throw IterationCapExceeded("algorithm5 exceeded " + std::to_string(inner_cap) +
                                   " inner rounds");
      StabilizeResult stable = stabilize(graph, std::move(cut));
      cut = std::move(stable.cut);
      last_log = std::move(stable.log);
      result.trace.push_back(row(++iter, cut, last_log));
      pass = greedy_pass(graph, cut);
      if (pass.s1_rem.empty()) break;
      Cut next = recombine(graph, pass);
      check_recombination(cut, next);
      cut = std::move(next);
    }
    check_complete(pass);
    if (!best || cut.s2_count() > best_n) {
      best = Schedule(pass.partial.order());
      best_n = cut.s2_count();
      result.final_cut = cut;
    }
    s = cut.size();
    if (r == s) {
      result.iterations = iter;
      result.last_type1_moves = last_log.type1_count;
      result.last_moved = NodeSet(graph.node_count());
      for (const auto& m : last_log.moves) result.last_moved.insert(m.node);
      result.last_moved_independent = is_independent(graph, result.last_moved);
      result.schedule = std::move(*best);
      return result;
    }
  }
}

EquilibriumResult algorithm5(const Graph& graph) {
  return algorithm5(graph, default_initial_cut(graph));
}

std::size_t sqrt_bound(std::size_t n) {
  // ceil(sqrt(n + 1)) - 1
  std::size_t root = 0;
  while ((root + 1) * (root + 1) <= n + 1) ++root;
  return root * root == n + 1 ? root - 1 : root;
}

std::size_t independence_bound(std::size_t n, std::size_t alpha) {
  return alpha >= n ? 0 : (n - alpha + 1) / 2;
}

std::size_t algorithm5_bound(std::size_t n, std::optional<std::size_t> alpha) {
  std::size_t bound = sqrt_bound(n);
  if (alpha) bound = std::max(bound, independence_bound(n, *alpha));
  return bound;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRow>& trace) {
  out << "iter,cut_size,s1,s2,moves_type1,moves_type2\n";
  for (const auto& t : trace)
    out << t.iter << ',' << t.cut_size << ',' << t.s1 << ',' << t.s2 << ',' << t.moves_type1 << ','
        << t.moves_type2 << '\n';
}

}  // namespace rebel
