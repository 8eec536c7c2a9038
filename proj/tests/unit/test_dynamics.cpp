#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "rebel/dynamics.hpp"
#include "rebel/error.hpp"
#include "rebel/generators.hpp"
#include "rebel/graph_io.hpp"
#include "support/reference.hpp"

using namespace rebel;

namespace {

constexpr Decision Y = Decision::Y;
constexpr Decision N = Decision::N;

Schedule order(std::vector<NodeId> o) { return Schedule(std::move(o)); }

}  // namespace

TEST(Decide, RebelRule) {
  EXPECT_EQ(decide(0, 0), Y);
  EXPECT_EQ(decide(2, 1), N);
  EXPECT_EQ(decide(1, 3), Y);
  EXPECT_EQ(decide(2, 2), Y);
}

TEST(Schedule, RejectsNonPermutations) {
  EXPECT_THROW(order({0, 0, 1}), InvalidInput);
  EXPECT_THROW(order({0, 3, 1}), InvalidInput);
  const Schedule s = order({2, 0, 1});
  EXPECT_EQ(s.position_of(2), 0u);
  EXPECT_EQ(s.at(2), 1u);
}

TEST(PartialSchedule, DuplicatePushIsAContractViolation) {
  PartialSchedule p(3);
  p.push(1, Y);
  EXPECT_THROW(p.push(1, N), ContractViolation);
}

TEST(Simulate, CompleteThree) {
  const Outcome o = simulate(gen::complete(3), order({0, 1, 2}));
  EXPECT_EQ(o.decision, (std::vector<Decision>{Y, N, Y}));
  EXPECT_EQ(o.count_y, 2u);
}

TEST(Simulate, StarCenterFirstAndLast) {
  const Graph g = gen::star(4);
  const Outcome first = simulate(g, order({0, 1, 2, 3}));
  EXPECT_EQ(first.decision, (std::vector<Decision>{Y, N, N, N}));
  const Outcome last = simulate(g, order({1, 2, 3, 0}));
  EXPECT_EQ(last.decision, (std::vector<Decision>{N, Y, Y, Y}));
}

TEST(Simulate, MatchesReferenceOnRandomSchedules) {
  std::mt19937_64 rng(9);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Graph g = gen::random_connected(5 + seed, 0.3, seed);
    std::vector<NodeId> o(g.node_count());
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    const Outcome out = simulate(g, Schedule(o));
    EXPECT_EQ(out.decision, ref::naive_simulate(g, o));
    EXPECT_EQ(out.count_y + out.count_n, g.node_count());
    const PartialSchedule prefix = simulate_prefix(g, std::span<const NodeId>(o).first(o.size() / 2));
    EXPECT_TRUE(prefix.consistent_with(g));
  }
}

TEST(AssociatedCut, Sizes) {
  const Graph k3 = gen::complete(3);
  const Cut c = associated_cut(k3, simulate(k3, order({0, 1, 2})));
  EXPECT_EQ(c.leading_set().members(), (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(c.size(), 2u);

  const Graph edge = gen::path(2);
  EXPECT_EQ(associated_cut(edge, simulate(edge, order({0, 1}))).size(), 1u);

  Outcome all_y{{Y, Y, Y}, 3, 0};
  const Cut empty = associated_cut(k3, all_y);
  EXPECT_EQ(empty.s2_count(), 0u);
  EXPECT_EQ(empty.size(), 0u);
}

TEST(RegretProof, HandExamples) {
  EXPECT_TRUE(is_regret_proof(gen::path(2), order({0, 1})).stable);
  EXPECT_TRUE(is_regret_proof(gen::star(4), order({0, 1, 2, 3})).stable);
  const Graph k4 = gen::complete(4);
  EXPECT_EQ(simulate(k4, order({0, 1, 2, 3})).decision, (std::vector<Decision>{Y, N, Y, N}));
  EXPECT_TRUE(is_regret_proof(k4, order({0, 1, 2, 3})).stable);
}

TEST(RegretProof, AgreesWithNashCheck) {
  std::mt19937_64 rng(3);
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = gen::random_connected(8, 0.4, seed);
    std::vector<NodeId> o(8);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    const Outcome out = simulate(g, Schedule(o));
    EXPECT_EQ(is_regret_proof(g, Schedule(o)).stable, ref::naive_equilibrium(g, out.decision));
  }
}

TEST(ScheduleIo, RoundTripWithLabels) {
  const std::vector<std::string> labels = {"a", "b", "c"};
  std::istringstream in("c\na\nb\n");
  const Schedule s = read_schedule(in, labels);
  EXPECT_EQ(std::vector<NodeId>(s.order().begin(), s.order().end()), (std::vector<NodeId>{2, 0, 1}));
  std::ostringstream out;
  write_schedule(out, s, labels);
  EXPECT_EQ(out.str(), "c\na\nb\n");
}

TEST(ScheduleIo, MissingNodeAndUnknownLabel) {
  const auto labels = identity_labels(3);
  std::istringstream missing("0\n1\n");
  EXPECT_THROW(read_schedule(missing, labels), InvalidInput);
  std::istringstream unknown("0\n1\n7\n");
  EXPECT_THROW(read_schedule(unknown, labels), InvalidInput);
}

TEST(ScheduleIo, OutcomeCsv) {
  const Graph g = gen::path(2);
  const Schedule s = order({1, 0});
  std::ostringstream out;
  write_outcome_csv(out, s, simulate(g, s), identity_labels(2));
  EXPECT_EQ(out.str(), "node,position,decision\n0,2,N\n1,1,Y\n");
}
