#include <gtest/gtest.h>

#include <sstream>

#include "rebel/dynamics.hpp"
#include "rebel/error.hpp"
#include "rebel/generators.hpp"
#include "rebel/oracle.hpp"
#include "support/reference.hpp"

using namespace rebel;

TEST(BruteForce, KnownOptima) {
  const OracleResult k4 = brute_force(gen::complete(4));
  EXPECT_EQ(k4.opt_y, 2u);
  EXPECT_EQ(k4.opt_n, 2u);
  EXPECT_EQ(k4.schedules, 24u);

  const OracleResult star = brute_force(gen::star(4));
  EXPECT_EQ(star.opt_y, 3u);
  EXPECT_EQ(star.opt_n, 3u);

  const OracleResult edge = brute_force(gen::path(2));
  EXPECT_EQ(edge.opt_y, 1u);
  EXPECT_EQ(edge.opt_n, 1u);
}

TEST(BruteForce, WitnessesReplay) {
  const Graph g = gen::triangle_chain(2);
  const OracleResult r = brute_force(g);
  EXPECT_EQ(simulate(g, r.argmax_y).count_y, r.opt_y);
  EXPECT_EQ(simulate(g, r.argmax_n).count_n, r.opt_n);
}

TEST(BruteForce, RefusesLargeGraphs) {
  EXPECT_THROW(brute_force(gen::star(10)), InstanceTooLarge);
}

TEST(ForEachOutcome, MatchesReferenceReplay) {
  const Graph g = gen::wheel(6);
  std::size_t count = 0;
  for_each_outcome(g, [&](std::span<const NodeId> order, std::span<const Decision> decision) {
    const auto expect = ref::naive_simulate(g, {order.begin(), order.end()});
    EXPECT_TRUE(std::equal(expect.begin(), expect.end(), decision.begin(), decision.end()));
    ++count;
  });
  EXPECT_EQ(count, 720u);
}

TEST(ExactOptimum, AgreesWithBruteForce) {
  std::vector<Graph> graphs = {gen::star(7), gen::complete(6), gen::wheel(8), gen::triangle_chain(3),
                               gen::cycle(9)};
  for (std::uint64_t seed = 1; seed <= 25; ++seed)
    graphs.push_back(gen::random_connected(3 + seed % 7, 0.4, seed));
  for (const Graph& g : graphs) {
    const OracleResult orc = brute_force(g);
    for (Decision d : {Decision::Y, Decision::N}) {
      const ExactOptimum e = exact_optimum(g, d);
      EXPECT_EQ(e.value, d == Decision::Y ? orc.opt_y : orc.opt_n);
      const Outcome o = simulate(g, e.witness);
      EXPECT_EQ(d == Decision::Y ? o.count_y : o.count_n, e.value);
    }
  }
}

TEST(Audit, TriangleChainPassesWithOracle) {
  const AuditReport r = audit(gen::triangle_chain(2), "tc2");
  EXPECT_TRUE(r.passed());
  bool has_oracle = false;
  for (const auto& e : r.entries) has_oracle = has_oracle || e.claim.rfind("oracle.", 0) == 0;
  EXPECT_TRUE(has_oracle);
}

TEST(Audit, LargeGraphSkipsOracle) {
  const AuditReport r = audit(gen::random_connected(50, 0.1, 7), "rnd");
  EXPECT_TRUE(r.passed());
  for (const auto& e : r.entries) EXPECT_NE(e.claim.rfind("oracle.", 0), 0u);
}

TEST(Audit, StarNine) {
  const AuditReport r = audit(gen::star(9), "star9");
  EXPECT_TRUE(r.passed());
  for (const auto& e : r.entries) {
    if (e.claim == "algorithm4.half_y") {
      EXPECT_EQ(e.required, 5u);
      EXPECT_GE(e.achieved, 5u);
    }
  }
  EXPECT_EQ(brute_force(gen::star(9)).opt_y, 8u);
}

TEST(Audit, CsvHasOneLinePerEntry) {
  const AuditReport r = audit(gen::complete(4), "k4");
  std::ostringstream out;
  write_audit_csv_header(out);
  write_audit_csv(out, r);
  const std::string s = out.str();
  EXPECT_EQ(static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')), r.entries.size() + 1);
}
