#include "rebel/cut.hpp"

#include <ostream>
#include <string>

#include "rebel/error.hpp"

namespace rebel {

std::size_t cut_size(const Graph& graph, std::span<const Side> sides) {
  std::size_t size = 0;
  for (const Edge& e : graph.edges())
    if (sides[e.u] != sides[e.v]) ++size;
  return size;
}

Cut Cut::from_sides(const Graph& graph, std::vector<Side> sides) {
  if (sides.size() != graph.node_count())
    throw InvalidInput("cut covers " + std::to_string(sides.size()) + " nodes, graph has " +
                       std::to_string(graph.node_count()));
  Cut cut;
  cut.size_ = cut_size(graph, sides);
  for (Side s : sides)
    if (s == Side::s1) ++cut.s1_count_;
  cut.sides_ = std::move(sides);
  return cut;
}

Cut Cut::from_leading_set(const Graph& graph, const NodeSet& s1) {
  std::vector<Side> sides(graph.node_count(), Side::s2);
  for (NodeId v : s1.members()) sides[v] = Side::s1;
  return from_sides(graph, std::move(sides));
}

NodeSet Cut::leading_set() const {
  NodeSet s(sides_.size());
  for (NodeId v = 0; v < sides_.size(); ++v)
    if (sides_[v] == Side::s1) s.insert(v);
  return s;
}

NodeSet Cut::trailing_set() const {
  NodeSet s(sides_.size());
  for (NodeId v = 0; v < sides_.size(); ++v)
    if (sides_[v] == Side::s2) s.insert(v);
  return s;
}

Cut Cut::swapped() const {
  Cut out = *this;
  for (Side& s : out.sides_) s = opposite(s);
  out.s1_count_ = s2_count();
  return out;
}

void Cut::flip(const Graph& graph, NodeId v) {
  std::size_t same = 0;
  for (NodeId u : graph.neighbors(v))
    if (sides_[u] == sides_[v]) ++same;
  const std::size_t cross = graph.degree(v) - same;
  size_ = size_ - cross + same;
  if (sides_[v] == Side::s1) {
    --s1_count_;
  } else {
    ++s1_count_;
  }
  sides_[v] = opposite(sides_[v]);
}

std::optional<NodeId> ViolationIndex::first_violating() const {
  for (NodeId v = 0; v < side_.size(); ++v)
    if (violating(v)) return v;
  return std::nullopt;
}

NodeSet ViolationIndex::violators() const {
  NodeSet out(side_.size());
  for (NodeId v = 0; v < side_.size(); ++v)
    if (violating(v)) out.insert(v);
  return out;
}

void ViolationIndex::swap_sides() {
  for (Side& s : side_) s = opposite(s);
}

ViolationIndex build_index(const Graph& graph, const Cut& cut) {
  ViolationIndex index;
  const std::size_t n = graph.node_count();
  index.side_.assign(cut.sides().begin(), cut.sides().end());
  index.delta_.assign(n, 0);
  for (NodeId v = 0; v < n; ++v)
    for (NodeId u : graph.neighbors(v)) index.delta_[v] += cut.side(u) == cut.side(v) ? -1 : 1;
  return index;
}

void MoveLog::record(const MoveRecord& move) {
  moves.push_back(move);
  if (move.type == 1) {
    ++type1_count;
  } else {
    ++type2_count;
  }
}

void MoveLog::append(const MoveLog& other) {
  if (moves.empty()) leading_before = other.leading_before;
  for (const auto& m : other.moves) record(m);
  leading_after = other.leading_after;
}

MoveRecord apply_move(const Graph& graph, Cut& cut, ViolationIndex& index, NodeId v) {
  if (!index.violating(v))
    throw ContractViolation("apply_move: node " + std::to_string(v) + " is not violating");
  const Side from = index.side_[v];
  const std::size_t before = cut.size();
  cut.flip(graph, v);
  index.side_[v] = opposite(from);
  index.delta_[v] = -index.delta_[v];
  for (NodeId u : graph.neighbors(v)) index.delta_[u] += index.side_[u] == from ? 2 : -2;

  MoveRecord record{v, from == Side::s1 ? 1 : 2, cut.size()};
  if (record.cut_size_after < before || (record.type == 1 && record.cut_size_after == before))
    throw ContractViolation("apply_move: cut size did not grow as a move requires");
  return record;
}

StabilityReport is_stable(const Graph& graph, const Cut& cut) {
  StabilityReport report{true, NodeSet(graph.node_count())};
  for (NodeId v = 0; v < graph.node_count(); ++v) {
    std::size_t in_s1 = 0, in_s2 = 0;
    for (NodeId u : graph.neighbors(v)) (cut.side(u) == Side::s1 ? in_s1 : in_s2)++;
    const bool ok = cut.side(v) == Side::s1 ? in_s2 >= in_s1 : in_s1 > in_s2;
    if (!ok) {
      report.stable = false;
      report.violators.insert(v);
    }
  }
  return report;
}

std::size_t move_cap(const Graph& graph) {
  return 4 * (graph.edge_count() + 1) * (graph.node_count() + 1);
}

namespace {

void run_moves(const Graph& graph, Cut& cut, ViolationIndex& index, MoveLog& log, std::size_t cap) {
  while (auto v = index.first_violating()) {
    if (log.moves.size() >= cap)
      throw IterationCapExceeded("stabilization exceeded " + std::to_string(cap) + " moves");
    log.record(apply_move(graph, cut, index, *v));
  }
}

}  // namespace

StabilizeResult stabilize(const Graph& graph, Cut cut) {
  StabilizeResult result;
  result.log.leading_before = cut.s1_count();
  ViolationIndex index = build_index(graph, cut);
  run_moves(graph, cut, index, result.log, move_cap(graph));
  result.log.leading_after = cut.s1_count();
  result.cut = std::move(cut);
  return result;
}

StabilizeResult procedure2(const Graph& graph, Cut cut) {
  StabilizeResult result;
  result.log.leading_before = cut.s1_count();
  const std::size_t n = graph.node_count();
  const std::size_t cap = move_cap(graph);
  ViolationIndex index = build_index(graph, cut);
  std::size_t rounds = 0;
  do {
    if (++rounds > cap) throw IterationCapExceeded("procedure2 exceeded its round cap");
    if (2 * cut.s1_count() < n) {
      cut = cut.swapped();
      index.swap_sides();
    }
    run_moves(graph, cut, index, result.log, cap);
  } while (2 * cut.s1_count() < n);
  result.log.leading_after = cut.s1_count();
  result.cut = std::move(cut);
  return result;
}

void write_cut(std::ostream& out, const Cut& cut) {
  for (NodeId v = 0; v < cut.node_count(); ++v)
    out << v << ' ' << static_cast<int>(cut.side(v)) << '\n';
}

void write_move_log_csv(std::ostream& out, const MoveLog& log) {
  out << "step,node,type,cut_size\n";
  for (std::size_t i = 0; i < log.moves.size(); ++i) {
    const auto& m = log.moves[i];
    out << i + 1 << ',' << m.node << ',' << m.type << ',' << m.cut_size_after << '\n';
  }
}

}  // namespace rebel
