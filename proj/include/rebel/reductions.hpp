#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "rebel/dynamics.hpp"
#include "rebel/graph.hpp"

namespace rebel {

struct Literal {
  std::uint32_t var = 0;  // 0-based
  bool negated = false;

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal&) const = default;
  // 2 var for x, 2 var + 1 for not x.
  std::uint32_t code() const { return 2 * var + (negated ? 1 : 0); }
};

// MAX-2SAT with every literal in at most three clauses.
struct SatInstance {
  std::size_t num_vars = 0;
  std::vector<std::vector<Literal>> clauses;  // 1 or 2 distinct literals each

  // Collapses repeated literals inside a clause, then checks clause sizes,
  // variable range and the three-occurrence limit. Throws InvalidInput.
  static SatInstance make(std::size_t num_vars, std::vector<std::vector<Literal>> clauses);

  std::vector<std::size_t> occurrences() const;  // indexed by Literal::code()
  std::size_t satisfied(const std::vector<bool>& assignment) const;
};

// DIMACS subset: "c" comments, "p cnf N M", clauses of 1-2 literals ending in 0.
SatInstance parse_dimacs(std::istream& in);
SatInstance load_dimacs(const std::filesystem::path& path);
void write_dimacs(std::ostream& out, const SatInstance& inst);

// Rejection-sampled instance with 2-literal clauses where possible.
SatInstance random_3occ_instance(std::size_t num_vars, std::size_t num_clauses, std::uint64_t seed);

struct SatOptimum {
  std::size_t opt = 0;
  std::vector<bool> assignment;
};

inline constexpr std::size_t kMaxSatBruteForceVars = 20;
SatOptimum sat_bruteforce(const SatInstance& inst);

enum class RoleKind : std::uint8_t { original, pendant, literal, clause, gadget };

struct Role {
  RoleKind kind = RoleKind::original;
  std::uint32_t owner = 0;  // pendant: original node; literal/gadget: variable; clause: index
  bool negated = false;     // literal only
  char part = 0;            // gadget only: 'A', 'B', 'C' or 'D'
  std::uint32_t index = 0;  // gadget only: 0-based within the part
};

struct ReducedInstance {
  Graph graph;
  std::vector<Role> roles;
  // MIS case
  std::size_t original_nodes = 0;
  std::size_t original_edges = 0;
  // SAT case
  SatInstance sat;
  std::size_t l = 0;

  bool from_sat() const { return l != 0; }
};

// Every node u of h gains deg(u) pendant neighbors, numbered after the
// originals in owner order.
ReducedInstance mis_to_rebel(const Graph& h);

// Pendants scheduled after their unique neighbor.
std::size_t theta(const ReducedInstance& inst, const Schedule& schedule);

// Literal nodes 2i and 2i+1, then clause nodes, then per variable the gadget
// A (2), B (2), C (9, a cycle), D (9L pendants, L per C-node), L = 10N + M.
ReducedInstance sat_to_rebel(const SatInstance& inst);

std::size_t sat_node_count(std::size_t num_vars, std::size_t num_clauses);
NodeId literal_node(const Literal& lit);
NodeId clause_node(const ReducedInstance& inst, std::size_t clause);
NodeId gadget_node(const ReducedInstance& inst, std::size_t var, char part, std::size_t index);

// True literals, then clauses, then per gadget: A u B, c1..c8, the false
// literal, c9, D.
Schedule gadget_witness_schedule(const ReducedInstance& inst, const std::vector<bool>& assignment);

// One JSON object per line: a header record, then node, role, param per node.
void write_certificate(std::ostream& out, const ReducedInstance& inst);

}  // namespace rebel
