#include <gtest/gtest.h>

#include <random>

#include "rebel/cut.hpp"
#include "rebel/error.hpp"
#include "rebel/generators.hpp"
#include "support/reference.hpp"

using namespace rebel;

namespace {

constexpr Side S1 = Side::s1;
constexpr Side S2 = Side::s2;

Cut make(const Graph& g, std::vector<Side> sides) { return Cut::from_sides(g, std::move(sides)); }

}  // namespace

TEST(ViolationIndex, Deltas) {
  const Graph k3 = gen::complete(3);
  const ViolationIndex a = build_index(k3, make(k3, {S1, S2, S1}));
  EXPECT_EQ(a.delta(0), 0);
  EXPECT_EQ(a.delta(1), 2);
  EXPECT_EQ(a.delta(2), 0);
  EXPECT_FALSE(a.first_violating());

  const Graph edge = gen::path(2);
  const ViolationIndex b = build_index(edge, make(edge, {S1, S1}));
  EXPECT_EQ(b.delta(0), -1);
  EXPECT_EQ(b.violators().members(), (std::vector<NodeId>{0, 1}));

  const Graph star = gen::star(4);
  const ViolationIndex c = build_index(star, make(star, {S2, S2, S2, S2}));
  EXPECT_EQ(c.delta(0), -3);
  EXPECT_EQ(c.delta(1), -1);
  EXPECT_EQ(c.violators().size(), 4u);
}

TEST(IsStable, HandExamples) {
  const Graph k4 = gen::complete(4);
  EXPECT_TRUE(is_stable(k4, make(k4, {S1, S2, S1, S2})).stable);
  const Graph edge = gen::path(2);
  const StabilityReport r = is_stable(edge, make(edge, {S1, S1}));
  EXPECT_FALSE(r.stable);
  EXPECT_EQ(r.violators.members(), (std::vector<NodeId>{0, 1}));
  const Graph p3 = gen::path(3);
  EXPECT_TRUE(is_stable(p3, make(p3, {S1, S2, S1})).stable);
}

TEST(ApplyMove, TypeOneOnEdge) {
  const Graph edge = gen::path(2);
  Cut cut = make(edge, {S1, S1});
  ViolationIndex index = build_index(edge, cut);
  const MoveRecord m = apply_move(edge, cut, index, 0);
  EXPECT_EQ(m.type, 1);
  EXPECT_EQ(cut.side(0), S2);
  EXPECT_EQ(cut.size(), 1u);
  EXPECT_EQ(index, build_index(edge, cut));
}

TEST(ApplyMove, TypeTwoKeepsSize) {
  const Graph k3 = gen::complete(3);
  Cut cut = make(k3, {S1, S2, S2});
  ViolationIndex index = build_index(k3, cut);
  EXPECT_EQ(index.delta(1), 0);
  const MoveRecord m = apply_move(k3, cut, index, 1);
  EXPECT_EQ(m.type, 2);
  EXPECT_EQ(cut.size(), 2u);
  EXPECT_EQ(cut.leading_set().members(), (std::vector<NodeId>{0, 1}));
}

TEST(ApplyMove, StarCenter) {
  const Graph star = gen::star(4);
  Cut cut = make(star, {S2, S2, S2, S2});
  ViolationIndex index = build_index(star, cut);
  apply_move(star, cut, index, 0);
  EXPECT_EQ(cut.size(), 3u);
}

TEST(ApplyMove, RejectsNonViolatingNode) {
  const Graph k3 = gen::complete(3);
  Cut cut = make(k3, {S1, S2, S1});
  ViolationIndex index = build_index(k3, cut);
  EXPECT_THROW(apply_move(k3, cut, index, 1), ContractViolation);
}

TEST(Stabilize, Examples) {
  const Graph k3 = gen::complete(3);
  const Cut stable = make(k3, {S1, S2, S1});
  const StabilizeResult same = stabilize(k3, stable);
  EXPECT_EQ(same.cut, stable);
  EXPECT_TRUE(same.log.moves.empty());

  const Graph edge = gen::path(2);
  const StabilizeResult e = stabilize(edge, make(edge, {S1, S1}));
  EXPECT_EQ(e.cut.size(), 1u);
  ASSERT_EQ(e.log.moves.size(), 1u);
  EXPECT_EQ(e.log.type1_count, 1u);

  const StabilizeResult t = stabilize(k3, make(k3, {S1, S2, S2}));
  ASSERT_EQ(t.log.moves.size(), 1u);
  EXPECT_EQ(t.log.type2_count, 1u);
  EXPECT_TRUE(is_stable(k3, t.cut).stable);
}

TEST(Stabilize, EveryCutOfSmallGraphsEndsStable) {
  for (const Graph& g : {gen::complete(3), gen::star(5), gen::wheel(6), gen::triangle_chain(2)}) {
    const std::size_t n = g.node_count();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      std::vector<Side> sides(n);
      for (std::size_t v = 0; v < n; ++v) sides[v] = mask >> v & 1U ? S2 : S1;
      const StabilizeResult r = stabilize(g, make(g, sides));
      const std::vector<Side> out(r.cut.sides().begin(), r.cut.sides().end());
      EXPECT_TRUE(ref::naive_stable(g, out));
      EXPECT_LE(r.log.type1_count, g.edge_count());
      EXPECT_GE(r.cut.size(), ref::naive_cut_size(g, sides));
    }
  }
}

TEST(Procedure2, Examples) {
  const Graph k4 = gen::complete(4);
  const StabilizeResult a = procedure2(k4, make(k4, {S2, S2, S2, S2}));
  EXPECT_TRUE(is_stable(k4, a.cut).stable);
  EXPECT_GE(a.cut.s1_count(), 2u);

  const Graph edge = gen::path(2);
  const Cut c = make(edge, {S1, S2});
  EXPECT_EQ(procedure2(edge, c).cut, c);

  const Graph p3 = gen::path(3);
  const StabilizeResult b = procedure2(p3, make(p3, {S2, S1, S2}));
  EXPECT_EQ(b.cut.leading_set().members(), (std::vector<NodeId>{0, 2}));
}

TEST(Procedure2, LeadingHalfOnRandomCuts) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = gen::random_connected(20 + seed, 0.2, seed);
    const StabilizeResult r = procedure2(g, make(g, ref::random_sides(g.node_count(), rng)));
    EXPECT_TRUE(is_stable(g, r.cut).stable);
    EXPECT_GE(2 * r.cut.s1_count(), g.node_count());
  }
}

TEST(Cut, SwappedKeepsSize) {
  const Graph g = gen::wheel(7);
  const Cut c = make(g, {S1, S2, S1, S2, S2, S1, S1});
  EXPECT_EQ(c.swapped().size(), c.size());
  EXPECT_EQ(c.swapped().s1_count(), c.s2_count());
  EXPECT_EQ(c.size(), ref::naive_cut_size(g, {S1, S2, S1, S2, S2, S1, S1}));
}
