#include <gtest/gtest.h>

#include "rebel/dynamics.hpp"
#include "rebel/generators.hpp"
#include "rebel/mirror.hpp"
#include "rebel/oracle.hpp"
#include "support/reference.hpp"

using namespace rebel;

namespace {

using Entry = PartialSchedule::Entry;
constexpr Decision Y = Decision::Y;
constexpr Decision N = Decision::N;

std::vector<Entry> entries(const PartialSchedule& p) { return {p.entries().begin(), p.entries().end()}; }

}  // namespace

TEST(Algorithm1, EdgeTrace) {
  const Graph g = gen::path(2);
  const MirrorPair pair = run_algorithm1(g);
  EXPECT_EQ(entries(pair.pi_prime), (std::vector<Entry>{{0, Y}, {1, N}}));
  EXPECT_EQ(entries(pair.pi_double_prime), (std::vector<Entry>{{1, Y}, {0, N}}));
  EXPECT_EQ(pair.a.size(), 2u);
}

TEST(Algorithm1, StarTrace) {
  const Graph g = gen::star(4);
  const MirrorPair pair = run_algorithm1(g);
  EXPECT_EQ(entries(pair.pi_prime), (std::vector<Entry>{{0, Y}, {1, N}, {2, N}, {3, N}}));
  EXPECT_EQ(entries(pair.pi_double_prime), (std::vector<Entry>{{1, Y}, {0, N}, {2, Y}, {3, Y}}));
  EXPECT_EQ(pair.pi_double_prime.count(Y), 3u);
  EXPECT_TRUE(mirror_property_holds(g, pair));

  const Schedule s = choose_and_extend(g, pair);
  EXPECT_EQ(std::vector<NodeId>(s.order().begin(), s.order().end()), (std::vector<NodeId>{1, 0, 2, 3}));
  EXPECT_EQ(simulate(g, s).count_y, 3u);
}

TEST(Algorithm1, TriangleLeavesOneNodeOutside) {
  const Graph g = gen::complete(3);
  const MirrorPair pair = run_algorithm1(g);
  EXPECT_EQ(pair.a.members(), (std::vector<NodeId>{0, 1}));
  EXPECT_TRUE(outside_set_settled(g, pair));
  const Schedule s = choose_and_extend(g, pair);
  EXPECT_EQ(std::vector<NodeId>(s.order().begin(), s.order().end()), (std::vector<NodeId>{0, 1, 2}));
  const Outcome o = simulate(g, s);
  EXPECT_EQ(o.decision[2], Y);
  EXPECT_EQ(o.count_y, 2u);
}

TEST(ScheduleY, CompleteGraphsMatchOracle) {
  for (std::size_t n = 4; n <= 8; ++n) {
    const Graph g = gen::complete(n);
    const std::size_t got = simulate(g, schedule_y(g)).count_y;
    EXPECT_EQ(got, (n + 1) / 2);
    EXPECT_EQ(got, brute_force(g).opt_y) << "n=" << n;
  }
}

TEST(ScheduleY, StarsAndTriangleChain) {
  for (std::size_t n = 2; n <= 30; ++n) EXPECT_EQ(simulate(gen::star(n), schedule_y(gen::star(n))).count_y, n - 1);
  const Graph tc = gen::triangle_chain(2);
  EXPECT_GE(simulate(tc, schedule_y(tc)).count_y, 3u);
}

TEST(ScheduleY, MirrorInvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = gen::random_connected(10 + seed * 3, ref::connectable_p(10 + seed * 3, seed % 2 ? 0.1 : 0.3), seed);
    const MirrorPair pair = run_algorithm1(g);
    EXPECT_TRUE(mirror_property_holds(g, pair));
    EXPECT_TRUE(outside_set_settled(g, pair));
    EXPECT_GE(2 * simulate(g, schedule_y(g)).count_y, g.node_count());
  }
}

TEST(OneProduct, Orders) {
  const Graph star = gen::star(4);
  const Schedule s = schedule_y(star);
  EXPECT_EQ(one_product_order(star, s), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_TRUE(one_product_replay_ok(star, {1, 2, 3}));

  const Graph k3 = gen::complete(3);
  const auto buyers = one_product_order(k3, schedule_y(k3));
  EXPECT_EQ(buyers.size(), 2u);
  EXPECT_TRUE(one_product_replay_ok(k3, buyers));
  EXPECT_FALSE(one_product_replay_ok(k3, {0, 1, 2}));

  const Graph edge = gen::path(2);
  EXPECT_EQ(one_product_order(edge, schedule_y(edge)).size(), 1u);
}
