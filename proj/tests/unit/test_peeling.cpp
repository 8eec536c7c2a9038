#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "rebel/dynamics.hpp"
#include "rebel/error.hpp"
#include "rebel/generators.hpp"
#include "rebel/independent_set.hpp"
#include "rebel/oracle.hpp"
#include "rebel/peeling.hpp"
#include "support/reference.hpp"

using namespace rebel;

namespace {

using Entry = PartialSchedule::Entry;
constexpr Decision Y = Decision::Y;
constexpr Decision N = Decision::N;

std::vector<NodeId> m(const NodeSet& s) { return s.members(); }

}  // namespace

TEST(Peel, Star) {
  const Graph g = gen::star(4);
  const PeelingDecomposition d = peel(g, NodeSet::of(4, {1, 2, 3}));
  EXPECT_EQ(d.levels, 1u);
  EXPECT_TRUE(d.y[0].empty());
  EXPECT_EQ(m(d.x[1]), (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(m(d.y[1]), (std::vector<NodeId>{0}));
  EXPECT_TRUE(verify_decomposition(g, d).empty());
}

TEST(Peel, Path) {
  const Graph g = gen::path(3);
  const PeelingDecomposition d = peel(g, NodeSet::of(3, {0, 2}));
  EXPECT_EQ(d.levels, 1u);
  EXPECT_TRUE(d.y[0].empty());
  EXPECT_EQ(m(d.x[1]), (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(m(d.y[1]), (std::vector<NodeId>{1}));
}

TEST(Peel, Triangle) {
  const Graph g = gen::complete(3);
  const PeelingDecomposition d = peel(g, NodeSet::of(3, {0}));
  EXPECT_EQ(d.levels, 1u);
  EXPECT_EQ(m(d.y[0]), (std::vector<NodeId>{1}));
  EXPECT_EQ(m(d.x[1]), (std::vector<NodeId>{0}));
  EXPECT_EQ(m(d.y[1]), (std::vector<NodeId>{2}));
  EXPECT_EQ(d.layer(1), 0u);
  EXPECT_EQ(d.layer(2), 1u);
}

TEST(Peel, RejectsNonMaximalSet) {
  EXPECT_THROW(peel(gen::path(3), NodeSet::of(3, {0})), InvalidInput);
  EXPECT_THROW(peel(gen::path(3), NodeSet::of(3, {0, 1})), InvalidInput);
}

TEST(Peel, DecompositionInvariantsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Graph g = gen::random_connected(8 + seed * 2, ref::connectable_p(8 + seed * 2, seed % 3 == 0 ? 0.3 : 0.08), seed);
    const PeelingDecomposition d = peel(g, greedy_maximal_independent_set(g));
    EXPECT_TRUE(verify_decomposition(g, d).empty()) << "seed " << seed;
  }
}

TEST(Algorithm2, StarTrace) {
  const Graph g = gen::star(4);
  const PeelingDecomposition d = peel(g, NodeSet::of(4, {1, 2, 3}));
  const Algorithm2Result r = run_algorithm2(g, d);
  EXPECT_EQ(std::vector<Entry>(r.pair.pi_prime.entries().begin(), r.pair.pi_prime.entries().end()),
            (std::vector<Entry>{{0, Y}, {1, N}, {2, N}, {3, N}}));
  EXPECT_EQ(r.chosen, 0);
  EXPECT_EQ(r.pair.a.size(), 4u);
}

TEST(Algorithm2, PathTrace) {
  const Graph g = gen::path(3);
  const Algorithm2Result r = run_algorithm2(g, peel(g, NodeSet::of(3, {0, 2})));
  EXPECT_EQ(std::vector<Entry>(r.pair.pi_prime.entries().begin(), r.pair.pi_prime.entries().end()),
            (std::vector<Entry>{{0, Y}, {1, N}, {2, Y}}));
  EXPECT_EQ(r.pair.pi_double_prime.count(N), 2u);
  EXPECT_EQ(r.chosen, 1);
}

TEST(Algorithm2, TriangleHalfOfA) {
  const Graph g = gen::complete(3);
  const Algorithm2Result r = run_algorithm2(g, peel(g, NodeSet::of(3, {0})));
  EXPECT_TRUE(mirror_property_holds(g, r.pair));
  EXPECT_GE(2 * r.pair.mirror(r.chosen).count(N), r.pair.a.size());
}

TEST(ScheduleN, Examples) {
  const ScheduleNResult star = schedule_n_detailed(gen::star(4));
  EXPECT_TRUE(star.mirror_branch);
  EXPECT_EQ(simulate(gen::star(4), star.schedule).count_n, 3u);

  const Graph tc = gen::triangle_chain(2);
  const std::size_t got = simulate(tc, schedule_n(tc)).count_n;
  EXPECT_GE(got, 2u);
  EXPECT_LE(got, brute_force(tc).opt_n);

  const Graph k4 = gen::complete(4);
  const std::size_t k = simulate(k4, schedule_n(k4)).count_n;
  EXPECT_GE(k, 2u);
  EXPECT_LE(k, brute_force(k4).opt_n);
}

TEST(ScheduleN, ThirdOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const std::size_t n = 5 + seed * 2;
    const double sparse = 2.0 * std::log(static_cast<double>(n)) / static_cast<double>(n);
    const Graph g = gen::random_connected(n, seed % 2 ? std::min(sparse, 0.6) : 0.25, seed);
    const ScheduleNResult r = schedule_n_detailed(g);
    EXPECT_GE(3 * simulate(g, r.schedule).count_n, g.node_count()) << "seed " << seed;
    for (NodeId v : r.a.complement().members()) EXPECT_EQ(r.decomposition.layer(v), 0u);
  }
}
