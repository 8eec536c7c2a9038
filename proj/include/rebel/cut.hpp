#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "rebel/graph.hpp"
#include "rebel/node_set.hpp"

namespace rebel {

// S1 is the leading set: the Y-deciders of an outcome. S2 holds the N-deciders.
enum class Side : std::uint8_t { s1 = 1, s2 = 2 };

constexpr Side opposite(Side s) { return s == Side::s1 ? Side::s2 : Side::s1; }

// Ordered bipartition [S1, S2] stored as a side array, with the number of
// crossing edges and the side cardinalities kept current.
class Cut {
 public:
  Cut() = default;

  static Cut from_sides(const Graph& graph, std::vector<Side> sides);
  static Cut from_leading_set(const Graph& graph, const NodeSet& s1);

  std::size_t node_count() const { return sides_.size(); }
  Side side(NodeId v) const { return sides_[v]; }
  std::span<const Side> sides() const { return sides_; }
  std::size_t size() const { return size_; }
  std::size_t s1_count() const { return s1_count_; }
  std::size_t s2_count() const { return sides_.size() - s1_count_; }
  NodeSet leading_set() const;
  NodeSet trailing_set() const;

  // [S2, S1]. The crossing edges are unchanged.
  Cut swapped() const;

  // Moves v to the other side in O(deg v).
  void flip(const Graph& graph, NodeId v);

  bool operator==(const Cut&) const = default;

 private:
  std::vector<Side> sides_;
  std::size_t size_ = 0;
  std::size_t s1_count_ = 0;
};

std::size_t cut_size(const Graph& graph, std::span<const Side> sides);

struct MoveRecord;

// Per-node (side, delta) with delta(v) = d_other(v) - d_own(v).
// v is violating iff (side s1 and delta < 0) or (side s2 and delta <= 0).
class ViolationIndex {
 public:
  ViolationIndex() = default;

  Side side(NodeId v) const { return side_[v]; }
  int delta(NodeId v) const { return delta_[v]; }
  bool violating(NodeId v) const {
    return side_[v] == Side::s1 ? delta_[v] < 0 : delta_[v] <= 0;
  }
  // Lowest-id violating node, found by an O(n) scan.
  std::optional<NodeId> first_violating() const;
  NodeSet violators() const;

  // Mirrors Cut::swapped(); every delta keeps its value.
  void swap_sides();

  bool operator==(const ViolationIndex&) const = default;

 private:
  friend ViolationIndex build_index(const Graph& graph, const Cut& cut);
  friend MoveRecord apply_move(const Graph& graph, Cut& cut, ViolationIndex& index, NodeId v);

  std::vector<Side> side_;
  std::vector<int> delta_;
};

ViolationIndex build_index(const Graph& graph, const Cut& cut);

struct MoveRecord {
  NodeId node = 0;
  int type = 0;  // 1: S1 -> S2, 2: S2 -> S1
  std::size_t cut_size_after = 0;
};

struct MoveLog {
  std::vector<MoveRecord> moves;
  std::size_t type1_count = 0;
  std::size_t type2_count = 0;
  // Leading-set size before the first and after the last move.
  std::size_t leading_before = 0;
  std::size_t leading_after = 0;

  void record(const MoveRecord& move);
  void append(const MoveLog& other);
};

// Moves a violating v across, keeping cut and index consistent. Touches
// the index entries of v and its neighbors only. Throws ContractViolation
// when v is not violating.
MoveRecord apply_move(const Graph& graph, Cut& cut, ViolationIndex& index, NodeId v);

struct StabilityReport {
  bool stable = false;
  NodeSet violators;
};

// d_S2(v) >= d_S1(v) for v in S1 and d_S1(v) > d_S2(v) for v in S2.
StabilityReport is_stable(const Graph& graph, const Cut& cut);

struct StabilizeResult {
  Cut cut;
  MoveLog log;
};

// 4 (m + 1) (n + 1): a move budget no correct run can reach.
std::size_t move_cap(const Graph& graph);

// Moves the lowest-id violating node until none remains.
StabilizeResult stabilize(const Graph& graph, Cut cut);

// Stable cut with 2 |S1| >= n: swap sides whenever the leading set is the
// smaller half, then stabilize; repeat until the leading set is large.
StabilizeResult procedure2(const Graph& graph, Cut cut);

// Diagnostics: "node side" per line, and step,node,type,cut_size CSV.
void write_cut(std::ostream& out, const Cut& cut);
void write_move_log_csv(std::ostream& out, const MoveLog& log);

}  // namespace rebel
