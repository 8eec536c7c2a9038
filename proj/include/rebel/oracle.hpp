#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rebel/dynamics.hpp"
#include "rebel/graph.hpp"

namespace rebel {

inline constexpr std::size_t kMaxBruteForceNodes = 9;

// Visits every schedule in lexicographic order with the decisions it
// induces (indexed by node). Uses its own incremental replay.
void for_each_outcome(
    const Graph& graph,
    const std::function<void(std::span<const NodeId> order, std::span<const Decision> decision)>&
        visit);

struct OracleResult {
  std::size_t opt_y = 0;
  std::size_t opt_n = 0;
  Schedule argmax_y;  // first in lexicographic order
  Schedule argmax_n;
  bool regret_proof_exists = false;
  std::size_t best_regret_proof_y = 0;
  std::size_t best_regret_proof_n = 0;
  std::size_t schedules = 0;
};

// All n! schedules. Throws InstanceTooLarge above kMaxBruteForceNodes.
OracleResult brute_force(const Graph& graph);

inline constexpr std::size_t kMaxExactNodes = 64;

struct ExactOptimum {
  std::size_t value = 0;
  Schedule witness;
  std::size_t states = 0;
};

// Maximum count of `objective` decisions over all schedules, by memoized
// search over (scheduled set, decisions that still matter). Twins are
// branched on once and nodes whose neighbors are all scheduled are placed
// immediately; neither changes the optimum.
ExactOptimum exact_optimum(const Graph& graph, Decision objective);

struct AuditEntry {
  std::string claim;
  std::size_t required = 0;
  std::size_t achieved = 0;
  bool passed = false;
  std::string note;
};

struct AuditReport {
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<std::size_t> alpha;
  std::optional<OracleResult> oracle;
  std::vector<AuditEntry> entries;

  bool passed() const;
};

// Runs schedule_y, schedule_n, algorithm4 and algorithm5 and checks every
// guarantee, plus oracle dominance for n <= 9. Failures become entries.
AuditReport audit(const Graph& graph, const std::string& name = "graph");

// graph,n,m,claim,required,achieved,passed,note
void write_audit_csv_header(std::ostream& out);
void write_audit_csv(std::ostream& out, const AuditReport& report);
void write_audit_text(std::ostream& out, const AuditReport& report);

}  // namespace rebel
