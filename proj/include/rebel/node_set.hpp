#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace rebel {

using NodeId = std::uint32_t;

// Membership bitset over the dense node ids [0, universe).
class NodeSet {
 public:
  NodeSet() = default;
  explicit NodeSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static NodeSet of(std::size_t universe, std::span<const NodeId> members) {
    NodeSet s(universe);
    for (NodeId v : members) s.insert(v);
    return s;
  }
  static NodeSet of(std::size_t universe, std::initializer_list<NodeId> members) {
    return of(universe, std::span<const NodeId>(members.begin(), members.size()));
  }
  static NodeSet full(std::size_t universe) {
    NodeSet s(universe);
    for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<NodeId>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }

  bool contains(NodeId v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(NodeId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(NodeId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::vector<NodeId> members() const {
    std::vector<NodeId> out;
    out.reserve(size());
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        out.push_back(static_cast<NodeId>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  NodeSet complement() const {
    NodeSet c(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
    c.trim();
    return c;
  }

  NodeSet& operator|=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  NodeSet& operator&=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  NodeSet& operator-=(const NodeSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend NodeSet operator|(NodeSet a, const NodeSet& b) { return a |= b; }
  friend NodeSet operator&(NodeSet a, const NodeSet& b) { return a &= b; }
  friend NodeSet operator-(NodeSet a, const NodeSet& b) { return a -= b; }

  bool operator==(const NodeSet&) const = default;

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace rebel
