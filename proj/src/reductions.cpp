#include "rebel/reductions.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rebel/error.hpp"
#include "rebel/generators.hpp"

namespace rebel {

namespace {

constexpr std::size_t kGadgetFixed = 13;  // |A| + |B| + |C|
constexpr std::size_t kCycle = 9;

std::string literal_text(const Literal& lit) {
  return (lit.negated ? "-" : "") + std::to_string(lit.var + 1);
}

}  // namespace

SatInstance SatInstance::make(std::size_t num_vars, std::vector<std::vector<Literal>> clauses) {
  SatInstance inst;
  inst.num_vars = num_vars;
  for (std::size_t j = 0; j < clauses.size(); ++j) {
    auto& c = clauses[j];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    if (c.empty() || c.size() > 2)
      throw InvalidInput("clause " + std::to_string(j + 1) + " has " + std::to_string(c.size()) +
                         " distinct literals; expected 1 or 2");
    for (const Literal& lit : c)
      if (lit.var >= num_vars)
        throw InvalidInput("clause " + std::to_string(j + 1) + " uses variable " +
                           std::to_string(lit.var + 1) + " of " + std::to_string(num_vars));
  }
  inst.clauses = std::move(clauses);
  const auto occ = inst.occurrences();
  for (std::uint32_t code = 0; code < occ.size(); ++code)
    if (occ[code] > 3)
      throw InvalidInput("3-OCC violation: literal " + literal_text({code / 2, code % 2 == 1}) +
                         " occurs in " + std::to_string(occ[code]) + " clauses");
  return inst;
}

std::vector<std::size_t> SatInstance::occurrences() const {
  std::vector<std::size_t> occ(2 * num_vars, 0);
  for (const auto& c : clauses)
    for (const Literal& lit : c) ++occ[lit.code()];
  return occ;
}

std::size_t SatInstance::satisfied(const std::vector<bool>& assignment) const {
  if (assignment.size() != num_vars)
    throw InvalidInput("assignment has " + std::to_string(assignment.size()) + " values for " +
                       std::to_string(num_vars) + " variables");
  std::size_t count = 0;
  for (const auto& c : clauses) {
    bool sat = false;
    for (const Literal& lit : c) sat = sat || assignment[lit.var] != lit.negated;
    if (sat) ++count;
  }
  return count;
}

SatInstance parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t num_vars = 0, declared = 0;
  std::vector<std::vector<Literal>> clauses;
  std::vector<Literal> current;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first == "c" || first[0] == '%') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (first == "p") {
      std::string fmt;
      if (have_header || !(ss >> fmt >> num_vars >> declared) || fmt != "cnf")
        throw InvalidInput(where + "expected a single 'p cnf N M' header");
      have_header = true;
      continue;
    }
    if (!have_header) throw InvalidInput(where + "clause before the 'p cnf' header");
    ss.clear();
    ss.str(line);
    long long value = 0;
    while (ss >> value) {
      if (value == 0) {
        clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = static_cast<std::uint64_t>(value < 0 ? -value : value);
      if (var > num_vars)
        throw InvalidInput(where + "variable " + std::to_string(var) + " exceeds " +
                           std::to_string(num_vars));
      current.push_back({static_cast<std::uint32_t>(var - 1), value < 0});
    }
    if (!ss.eof()) throw InvalidInput(where + "non-integer token");
  }
  if (!have_header) throw InvalidInput("missing 'p cnf' header");
  if (!current.empty()) throw InvalidInput("last clause is not terminated by 0");
  if (clauses.size() != declared)
    throw InvalidInput("header declares " + std::to_string(declared) + " clauses, found " +
                       std::to_string(clauses.size()));
  return SatInstance::make(num_vars, std::move(clauses));
}

SatInstance load_dimacs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput(path.string() + ": cannot open");
  try {
    return parse_dimacs(in);
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void write_dimacs(std::ostream& out, const SatInstance& inst) {
  out << "p cnf " << inst.num_vars << ' ' << inst.clauses.size() << '\n';
  for (const auto& c : inst.clauses) {
    for (const Literal& lit : c) out << literal_text(lit) << ' ';
    out << "0\n";
  }
}

SatInstance random_3occ_instance(std::size_t num_vars, std::size_t num_clauses, std::uint64_t seed) {
  if (num_vars == 0) throw InvalidInput("instance needs at least one variable");
  if (num_clauses > 3 * num_vars)
    throw InvalidInput("at most 3N clauses fit the three-occurrence limit");
  std::mt19937_64 rng(gen::splitmix64(seed));
  const auto literals = static_cast<std::uint32_t>(2 * num_vars);
  std::vector<std::size_t> occ(literals, 0);
  std::vector<std::vector<Literal>> clauses;
  auto draw = [&](std::optional<std::uint32_t> exclude) -> std::optional<std::uint32_t> {
    std::vector<std::uint32_t> open;
    for (std::uint32_t code = 0; code < literals; ++code)
      if (occ[code] < 3 && code != exclude) open.push_back(code);
    if (open.empty()) return std::nullopt;
    return open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
  };
  for (std::size_t j = 0; j < num_clauses; ++j) {
    auto a = draw(std::nullopt);
    if (!a) throw InvalidInput("no literal has occurrences left");
    ++occ[*a];
    std::vector<Literal> clause{{*a / 2, *a % 2 == 1}};
    if (auto b = draw(a)) {
      ++occ[*b];
      clause.push_back({*b / 2, *b % 2 == 1});
    }
    clauses.push_back(std::move(clause));
  }
  return SatInstance::make(num_vars, std::move(clauses));
}

SatOptimum sat_bruteforce(const SatInstance& inst) {
  if (inst.num_vars > kMaxSatBruteForceVars)
    throw InstanceTooLarge("SAT brute force limited to " + std::to_string(kMaxSatBruteForceVars) +
                           " variables, instance has " + std::to_string(inst.num_vars));
  SatOptimum best;
  best.assignment.assign(inst.num_vars, false);
  best.opt = inst.satisfied(best.assignment);
  std::vector<bool> a(inst.num_vars);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << inst.num_vars); ++mask) {
    for (std::size_t i = 0; i < inst.num_vars; ++i) a[i] = (mask >> i) & 1U;
    const std::size_t s = inst.satisfied(a);
    if (s > best.opt) {
      best.opt = s;
      best.assignment = a;
    }
  }
  return best;
}

ReducedInstance mis_to_rebel(const Graph& h) {
  require_schedulable(h);
  const std::size_t n = h.node_count();
  ReducedInstance out;
  out.original_nodes = n;
  out.original_edges = h.edge_count();
  std::vector<Edge> edges = h.edges();
  out.roles.assign(n, Role{RoleKind::original, 0, false, 0, 0});
  for (NodeId u = 0; u < n; ++u) {
    for (std::size_t k = 0; k < h.degree(u); ++k) {
      const auto p = static_cast<NodeId>(out.roles.size());
      out.roles.push_back({RoleKind::pendant, u, false, 0, static_cast<std::uint32_t>(k)});
      edges.push_back({u, p});
    }
  }
  out.graph = Graph::from_edges(out.roles.size(), edges);
  return out;
}

std::size_t theta(const ReducedInstance& inst, const Schedule& schedule) {
  if (schedule.size() != inst.graph.node_count())
    throw InvalidInput("schedule has " + std::to_string(schedule.size()) + " nodes, instance has " +
                       std::to_string(inst.graph.node_count()));
  std::size_t count = 0;
  for (NodeId v = 0; v < inst.roles.size(); ++v) {
    const Role& r = inst.roles[v];
    if (r.kind == RoleKind::pendant && schedule.position_of(v) > schedule.position_of(r.owner))
      ++count;
  }
  return count;
}

std::size_t sat_node_count(std::size_t num_vars, std::size_t num_clauses) {
  const std::size_t l = 10 * num_vars + num_clauses;
  return num_clauses + (15 + 9 * l) * num_vars;
}

NodeId literal_node(const Literal& lit) { return lit.code(); }

NodeId clause_node(const ReducedInstance& inst, std::size_t clause) {
  return static_cast<NodeId>(2 * inst.sat.num_vars + clause);
}

NodeId gadget_node(const ReducedInstance& inst, std::size_t var, char part, std::size_t index) {
  const std::size_t block = kGadgetFixed + kCycle * inst.l;
  std::size_t base = 2 * inst.sat.num_vars + inst.sat.clauses.size() + var * block;
  switch (part) {
    case 'A': break;
    case 'B': base += 2; break;
    case 'C': base += 4; break;
    case 'D': base += kGadgetFixed; break;
    default: throw InvalidInput(std::string("unknown gadget part ") + part);
  }
  return static_cast<NodeId>(base + index);
}

ReducedInstance sat_to_rebel(const SatInstance& inst) {
  ReducedInstance out;
  out.sat = SatInstance::make(inst.num_vars, inst.clauses);
  const std::size_t nv = inst.num_vars, nc = inst.clauses.size();
  out.l = 10 * nv + nc;
  const std::size_t total = sat_node_count(nv, nc);
  out.roles.resize(total);
  std::vector<Edge> edges;

  for (std::uint32_t i = 0; i < nv; ++i) {
    out.roles[2 * i] = {RoleKind::literal, i, false, 0, 0};
    out.roles[2 * i + 1] = {RoleKind::literal, i, true, 0, 0};
  }
  for (std::size_t j = 0; j < nc; ++j) {
    const NodeId y = clause_node(out, j);
    out.roles[y] = {RoleKind::clause, static_cast<std::uint32_t>(j), false, 0, 0};
    for (const Literal& lit : out.sat.clauses[j]) edges.push_back({literal_node(lit), y});
  }
  for (std::uint32_t i = 0; i < nv; ++i) {
    const NodeId x = 2 * i, nx = 2 * i + 1;
    auto role = [&](char part, std::size_t k) {
      out.roles[gadget_node(out, i, part, k)] = {RoleKind::gadget, i, false, part,
                                                 static_cast<std::uint32_t>(k)};
    };
    for (std::size_t k = 0; k < 2; ++k) {
      role('A', k);
      role('B', k);
    }
    for (std::size_t k = 0; k < kGadgetFixed; ++k) {
      const auto g = static_cast<NodeId>(gadget_node(out, i, 'A', 0) + k);
      edges.push_back({x, g});
      edges.push_back({nx, g});
    }
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t k = 0; k < kCycle; ++k)
        edges.push_back({gadget_node(out, i, 'B', b), gadget_node(out, i, 'C', k)});
    for (std::size_t k = 0; k < kCycle; ++k) {
      role('C', k);
      const NodeId c = gadget_node(out, i, 'C', k);
      edges.push_back({c, gadget_node(out, i, 'C', (k + 1) % kCycle)});
      for (std::size_t t = 0; t < out.l; ++t) {
        role('D', k * out.l + t);
        edges.push_back({c, gadget_node(out, i, 'D', k * out.l + t)});
      }
    }
  }
  out.graph = Graph::from_edges(total, edges);
  return out;
}

Schedule gadget_witness_schedule(const ReducedInstance& inst, const std::vector<bool>& assignment) {
  if (!inst.from_sat()) throw InvalidInput("witness schedule needs a SAT-derived instance");
  const std::size_t nv = inst.sat.num_vars;
  if (assignment.size() != nv)
    throw InvalidInput("assignment has " + std::to_string(assignment.size()) + " values for " +
                       std::to_string(nv) + " variables");
  std::vector<NodeId> order;
  order.reserve(inst.graph.node_count());
  auto true_literal = [&](std::uint32_t i) { return literal_node({i, !assignment[i]}); };
  auto false_literal = [&](std::uint32_t i) { return literal_node({i, assignment[i]}); };

  for (std::uint32_t i = 0; i < nv; ++i) order.push_back(true_literal(i));
  for (std::size_t j = 0; j < inst.sat.clauses.size(); ++j) order.push_back(clause_node(inst, j));
  for (std::uint32_t i = 0; i < nv; ++i) {
    for (std::size_t k = 0; k < 2; ++k) order.push_back(gadget_node(inst, i, 'A', k));
    for (std::size_t k = 0; k < 2; ++k) order.push_back(gadget_node(inst, i, 'B', k));
    for (std::size_t k = 0; k + 1 < kCycle; ++k) order.push_back(gadget_node(inst, i, 'C', k));
    order.push_back(false_literal(i));
    order.push_back(gadget_node(inst, i, 'C', kCycle - 1));
    for (std::size_t k = 0; k < kCycle * inst.l; ++k) order.push_back(gadget_node(inst, i, 'D', k));
  }
  return Schedule(std::move(order));
}

void write_certificate(std::ostream& out, const ReducedInstance& inst) {
  using nlohmann::json;
  json header = {{"nodes", inst.graph.node_count()}, {"edges", inst.graph.edge_count()}};
  if (inst.from_sat()) {
    std::size_t unit = 0;
    for (const auto& c : inst.sat.clauses)
      if (c.size() == 1) ++unit;
    header["instance"] = "sat";
    header["N"] = inst.sat.num_vars;
    header["M"] = inst.sat.clauses.size();
    header["L"] = inst.l;
    header["unit_clauses"] = unit;
  } else {
    header["instance"] = "mis";
    header["original_nodes"] = inst.original_nodes;
    header["F"] = inst.original_edges;
  }
  out << header.dump() << '\n';
  for (NodeId v = 0; v < inst.roles.size(); ++v) {
    const Role& r = inst.roles[v];
    json rec = {{"node", v}};
    switch (r.kind) {
      case RoleKind::original:
        rec["role"] = "original";
        rec["param"] = json::object();
        break;
      case RoleKind::pendant:
        rec["role"] = "pendant";
        rec["param"] = {{"owner", r.owner}};
        break;
      case RoleKind::literal:
        rec["role"] = "literal";
        rec["param"] = {{"var", r.owner + 1}, {"negated", r.negated}};
        break;
      case RoleKind::clause:
        rec["role"] = "clause";
        rec["param"] = {{"clause", r.owner + 1}};
        break;
      case RoleKind::gadget:
        rec["role"] = "gadget";
        rec["param"] = {{"var", r.owner + 1}, {"part", std::string(1, r.part)}, {"index", r.index + 1}};
        break;
    }
    out << rec.dump() << '\n';
  }
}

}  // namespace rebel
