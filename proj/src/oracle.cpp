#include "rebel/oracle.hpp"

#include <bit>
#include <cstdint>
#include <ostream>
#include <unordered_map>

#include "rebel/equilibrium.hpp"
#include "rebel/error.hpp"
#include "rebel/independent_set.hpp"
#include "rebel/mirror.hpp"
#include "rebel/peeling.hpp"

namespace rebel {

namespace {

class OutcomeWalker {
 public:
  using Visit = std::function<void(std::span<const NodeId>, std::span<const Decision>)>;

  OutcomeWalker(const Graph& graph, const Visit& visit)
      : graph_(graph),
        visit_(visit),
        n_(graph.node_count()),
        used_(n_, 0),
        y_(n_, 0),
        no_(n_, 0),
        decision_(n_, Decision::Y) {
    order_.reserve(n_);
  }

  void run() { descend(); }

 private:
  void descend() {
    if (order_.size() == n_) {
      visit_(order_, decision_);
      return;
    }
    for (NodeId v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      const Decision d = y_[v] > no_[v] ? Decision::N : Decision::Y;
      used_[v] = 1;
      decision_[v] = d;
      order_.push_back(v);
      for (NodeId u : graph_.neighbors(v)) ++(d == Decision::Y ? y_[u] : no_[u]);
      descend();
      for (NodeId u : graph_.neighbors(v)) --(d == Decision::Y ? y_[u] : no_[u]);
      order_.pop_back();
      used_[v] = 0;
    }
  }

  const Graph& graph_;
  const Visit& visit_;
  std::size_t n_;
  std::vector<char> used_;
  std::vector<int> y_, no_;
  std::vector<Decision> decision_;
  std::vector<NodeId> order_;
};

// Nash check written out directly: a Y-decider would not prefer N, and an
// N-decider would not prefer Y, given all final decisions.
bool equilibrium(const Graph& graph, std::span<const Decision> decision) {
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    std::size_t y = 0, no = 0;
    for (NodeId u : graph.neighbors(v)) ++(decision[u] == Decision::Y ? y : no);
    if (decision[v] == Decision::Y ? no < y : y <= no) return false;
  }
  return true;
}

}  // namespace

void for_each_outcome(
    const Graph& graph,
    const std::function<void(std::span<const NodeId>, std::span<const Decision>)>& visit) {
  if (graph.node_count() > kMaxBruteForceNodes)
    throw InstanceTooLarge("brute force limited to " + std::to_string(kMaxBruteForceNodes) +
                           " nodes, graph has " + std::to_string(graph.node_count()));
  OutcomeWalker(graph, visit).run();
}

OracleResult brute_force(const Graph& graph) {
  OracleResult r;
  bool first = true;
  for_each_outcome(graph, [&](std::span<const NodeId> order, std::span<const Decision> decision) {
    std::size_t y = 0;
    for (Decision d : decision)
      if (d == Decision::Y) ++y;
    const std::size_t no = decision.size() - y;
    const std::vector<NodeId> ord(order.begin(), order.end());
    if (first || y > r.opt_y) {
      r.opt_y = y;
      r.argmax_y = Schedule(ord);
    }
    if (first || no > r.opt_n) {
      r.opt_n = no;
      r.argmax_n = Schedule(ord);
    }
    first = false;
    if (equilibrium(graph, decision)) {
      r.regret_proof_exists = true;
      r.best_regret_proof_y = std::max(r.best_regret_proof_y, y);
      r.best_regret_proof_n = std::max(r.best_regret_proof_n, no);
    }
    ++r.schedules;
  });
  return r;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
    return std::hash<std::uint64_t>()(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

class ExactSearch {
 public:
  ExactSearch(const Graph& graph, Decision objective)
      : n_(graph.node_count()), objective_(objective), adj_(n_, 0), twin_below_(n_, 0) {
    for (NodeId v = 0; v < n_; ++v)
      for (NodeId u : graph.neighbors(v)) adj_[v] |= bit(u);
    for (NodeId v = 0; v < n_; ++v)
      for (NodeId u = 0; u < v; ++u)
        if ((adj_[u] & ~bit(v)) == (adj_[v] & ~bit(u))) twin_below_[v] |= bit(u);
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::size_t solve() { return best(0, 0); }

  std::vector<NodeId> witness() {
    std::vector<NodeId> order;
    std::uint64_t mask = 0, ymask = 0;
    for (;;) {
      flush(mask, ymask, &order);
      if (mask == full_) return order;
      const int target = memo_.at(key(mask, ymask));
      bool moved = false;
      for (NodeId v = 0; v < n_ && !moved; ++v) {
        if (!branchable(v, mask)) continue;
        const Decision d = decision(v, mask, ymask);
        const std::uint64_t nm = mask | bit(v), ny = d == Decision::Y ? ymask | bit(v) : ymask;
        if (static_cast<int>(gain(d) + best(nm, ny)) == target) {
          order.push_back(v);
          mask = nm;
          ymask = ny;
          moved = true;
        }
      }
      if (!moved) throw ContractViolation("exact search could not rebuild its witness");
    }
  }

  std::size_t states() const { return memo_.size(); }

 private:
  static std::uint64_t bit(NodeId v) { return std::uint64_t{1} << v; }

  std::size_t gain(Decision d) const { return d == objective_ ? 1 : 0; }

  Decision decision(NodeId v, std::uint64_t mask, std::uint64_t ymask) const {
    const auto y = std::popcount(adj_[v] & ymask);
    const auto no = std::popcount(adj_[v] & mask & ~ymask);
    return y > no ? Decision::N : Decision::Y;
  }

  bool branchable(NodeId v, std::uint64_t mask) const {
    return !(mask & bit(v)) && (twin_below_[v] & ~mask) == 0;
  }

  // Places every unscheduled node whose neighbors are all scheduled. Its
  // decision is fixed and influences nobody still to come.
  std::size_t flush(std::uint64_t& mask, std::uint64_t& ymask, std::vector<NodeId>* order) const {
    std::size_t gained = 0;
    for (NodeId v = 0; v < n_; ++v) {
      if ((mask & bit(v)) || (adj_[v] & ~mask)) continue;
      const Decision d = decision(v, mask, ymask);
      mask |= bit(v);
      if (d == Decision::Y) ymask |= bit(v);
      gained += gain(d);
      if (order) order->push_back(v);
    }
    return gained;
  }

  std::pair<std::uint64_t, std::uint64_t> key(std::uint64_t mask, std::uint64_t ymask) const {
    std::uint64_t frontier = 0;
    for (NodeId v = 0; v < n_; ++v)
      if ((mask & bit(v)) && (adj_[v] & ~mask)) frontier |= bit(v);
    return {mask, ymask & frontier};
  }

  std::size_t best(std::uint64_t mask, std::uint64_t ymask) {
    const std::size_t gained = flush(mask, ymask, nullptr);
    if (mask == full_) return gained;
    const auto k = key(mask, ymask);
    if (auto it = memo_.find(k); it != memo_.end()) return gained + it->second;
    int result = -1;
    for (NodeId v = 0; v < n_; ++v) {
      if (!branchable(v, mask)) continue;
      const Decision d = decision(v, mask, ymask);
      const std::size_t val =
          gain(d) + best(mask | bit(v), d == Decision::Y ? ymask | bit(v) : ymask);
      result = std::max(result, static_cast<int>(val));
    }
    memo_.emplace(k, result);
    return gained + static_cast<std::size_t>(result);
  }

  std::size_t n_;
  Decision objective_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> twin_below_;
  std::uint64_t full_ = 0;
  std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, int, KeyHash> memo_;
};

}  // namespace

ExactOptimum exact_optimum(const Graph& graph, Decision objective) {
  if (graph.node_count() > kMaxExactNodes)
    throw InstanceTooLarge("exact optimum limited to " + std::to_string(kMaxExactNodes) +
                           " nodes, graph has " + std::to_string(graph.node_count()));
  ExactSearch search(graph, objective);
  ExactOptimum out;
  out.value = search.solve();
  out.witness = Schedule(search.witness());
  out.states = search.states();
  return out;
}

bool AuditReport::passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

namespace {

struct AlgorithmRun {
  std::optional<Outcome> outcome;
  bool regret_proof = false;
  std::string error;
};

template <typename F>
AlgorithmRun run_checked(const Graph& graph, F&& make_schedule) {
  AlgorithmRun run;
  try {
    const Schedule s = make_schedule();
    run.outcome = simulate(graph, s);
    run.regret_proof = is_stable(graph, associated_cut(graph, *run.outcome)).stable;
  } catch (const std::exception& e) {
    run.error = e.what();
  }
  return run;
}

void add(AuditReport& report, std::string claim, std::size_t required, std::size_t achieved,
         std::string note = {}) {
  report.entries.push_back({std::move(claim), required, achieved, achieved >= required, std::move(note)});
}

void add_count(AuditReport& report, const std::string& claim, const AlgorithmRun& run,
               std::size_t required, Decision d) {
  if (!run.outcome) {
    report.entries.push_back({claim, required, 0, false, run.error});
    return;
  }
  add(report, claim, required, d == Decision::Y ? run.outcome->count_y : run.outcome->count_n);
}

void add_flag(AuditReport& report, const std::string& claim, bool value, std::string note = {}) {
  add(report, claim, 1, value ? 1 : 0, std::move(note));
}

// Oracle optimum must be at least the algorithm's count.
void add_dominance(AuditReport& report, const std::string& claim, const AlgorithmRun& run,
                   std::size_t optimum, Decision d) {
  if (!run.outcome) return;
  const std::size_t count = d == Decision::Y ? run.outcome->count_y : run.outcome->count_n;
  add(report, claim, count, optimum);
}

}  // namespace

AuditReport audit(const Graph& graph, const std::string& name) {
  AuditReport report;
  report.graph = name;
  report.n = graph.node_count();
  report.m = graph.edge_count();
  const std::size_t n = report.n;
  if (n <= kDefaultExactMisBound) report.alpha = exact_max_independent_set(graph).alpha;

  const AlgorithmRun y = run_checked(graph, [&] { return schedule_y(graph); });
  const AlgorithmRun no = run_checked(graph, [&] { return schedule_n(graph); });
  const AlgorithmRun a4 = run_checked(graph, [&] { return algorithm4(graph).schedule; });
  const AlgorithmRun a5 = run_checked(graph, [&] { return algorithm5(graph).schedule; });

  add_count(report, "schedule_y.half_y", y, (n + 1) / 2, Decision::Y);
  add_count(report, "schedule_n.third_n", no, (n + 2) / 3, Decision::N);
  add_count(report, "algorithm4.half_y", a4, (n + 1) / 2, Decision::Y);
  add_flag(report, "algorithm4.regret_proof", a4.regret_proof, a4.error);
  add_count(report, "algorithm5.n_bound", a5, algorithm5_bound(n, report.alpha), Decision::N);
  add_flag(report, "algorithm5.regret_proof", a5.regret_proof, a5.error);

  if (n <= kMaxBruteForceNodes) {
    report.oracle = brute_force(graph);
    const OracleResult& o = *report.oracle;
    add_dominance(report, "oracle.schedule_y", y, o.opt_y, Decision::Y);
    add_dominance(report, "oracle.schedule_n", no, o.opt_n, Decision::N);
    add_dominance(report, "oracle.algorithm4", a4, o.best_regret_proof_y, Decision::Y);
    add_dominance(report, "oracle.algorithm5", a5, o.best_regret_proof_n, Decision::N);
    add_flag(report, "oracle.regret_proof_exists", o.regret_proof_exists);
  }
  return report;
}

void write_audit_csv_header(std::ostream& out) {
  out << "graph,n,m,claim,required,achieved,passed,note\n";
}

void write_audit_csv(std::ostream& out, const AuditReport& report) {
  for (const auto& e : report.entries) {
    std::string note = e.note;
    for (char& c : note)
      if (c == ',' || c == '\n') c = ';';
    out << report.graph << ',' << report.n << ',' << report.m << ',' << e.claim << ','
        << e.required << ',' << e.achieved << ',' << (e.passed ? "true" : "false") << ',' << note
        << '\n';
  }
}

void write_audit_text(std::ostream& out, const AuditReport& report) {
  out << report.graph << ": n=" << report.n << " m=" << report.m;
  if (report.alpha) out << " alpha=" << *report.alpha;
  if (report.oracle) out << " optY=" << report.oracle->opt_y << " optN=" << report.oracle->opt_n;
  out << '\n';
  for (const auto& e : report.entries) {
    out << "  [" << (e.passed ? "pass" : "FAIL") << "] " << e.claim << ": " << e.achieved
        << " vs required " << e.required;
    if (!e.note.empty()) out << " (" << e.note << ')';
    out << '\n';
  }
}

}  // namespace rebel
