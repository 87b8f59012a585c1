#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "sscs/zero_forcing.hpp"
#include "test_support.hpp"
#include "zf_oracle.hpp"

using namespace sscs;

TEST(ZeroForcing, Examples) {
  Graph p3 = test::path(3);
  DerivedSet d = derived_set(p3, LeaderSet(p3, {0}));
  EXPECT_EQ(d.members, (std::vector<NodeId>{0, 1, 2}));
  EXPECT_EQ(d.trace, (std::vector<ForceEvent>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(is_zfs(p3, LeaderSet(p3, {0})));

  Graph s = test::star(4);
  EXPECT_EQ(derived_set(s, LeaderSet(s, {0})).members, (std::vector<NodeId>{0}));
  EXPECT_FALSE(is_zfs(s, LeaderSet(s, {0})));

  Graph p4 = test::path(4);
  EXPECT_EQ(zeta(p4, LeaderSet(p4, {1})), 1u);
  EXPECT_TRUE(is_zfs(p4, LeaderSet(p4, {0, 1, 2, 3})));
}

TEST(ZeroForcing, ForcesInNeighbourOnly) {
  // 1 -> 0: node 0 has the single white in-neighbour 1
  Graph g = test::make(2, true, {{1, 0}});
  EXPECT_EQ(zeta(g, LeaderSet(g, {0})), 2u);
  // 0 -> 1: node 0 has no in-neighbours, nothing happens
  Graph h = test::make(2, true, {{0, 1}});
  EXPECT_EQ(zeta(h, LeaderSet(h, {0})), 1u);
}

TEST(ZeroForcing, KeepsInputOrder) {
  Graph g = test::path(5);
  DerivedSet d = derived_set(g, LeaderSet(g, {4, 0}));
  EXPECT_EQ(d.input, (std::vector<NodeId>{4, 0}));
  EXPECT_EQ(d.size(), 5u);
  EXPECT_TRUE(d.contains(2));
}

TEST(ZeroForcing, OrderIndependence) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 14;
    Graph g = test::random_graph(rng, n, rng() % 2 == 0, 0.2 + 0.3 * (rng() % 10) / 10.0);
    auto leaders = test::random_subset(rng, n, 1 + rng() % std::min<std::size_t>(4, n));
    DerivedSet d = derived_set(g, LeaderSet(g, leaders));
    for (int s = 0; s < 20; ++s) ASSERT_EQ(test::naive_derived_set(g, leaders, rng), d.members);
  }
}

TEST(ZeroForcing, TerminalAndConsistentTrace) {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 14;
    Graph g = test::random_graph(rng, n, rng() % 2 == 0, 0.3);
    auto leaders = test::random_subset(rng, n, 1 + rng() % n);
    DerivedSet d = derived_set(g, LeaderSet(g, leaders));
    EXPECT_GE(d.size(), leaders.size());
    EXPECT_EQ(d.size(), leaders.size() + d.trace.size());
    // no black node has exactly one white in-neighbour
    for (NodeId v : d.members) {
      std::size_t white = 0;
      for (NodeId u : g.in_neighbors(v)) white += d.contains(u) ? 0 : 1;
      EXPECT_NE(white, 1u);
    }
    EXPECT_EQ(is_zfs(g, LeaderSet(g, leaders)), d.size() == n);
  }
}

TEST(ZeroForcing, Monotone) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + rng() % 12;
    Graph g = test::random_graph(rng, n, rng() % 2 == 0, 0.3);
    auto big = test::random_subset(rng, n, 2 + rng() % (n - 1));
    std::vector<NodeId> small(big.begin(), big.begin() + 1 + rng() % (big.size() - 1));
    DerivedSet a = derived_set(g, LeaderSet(g, small));
    DerivedSet b = derived_set(g, LeaderSet(g, big));
    EXPECT_TRUE(std::includes(b.members.begin(), b.members.end(), a.members.begin(), a.members.end()));
  }
}

TEST(ZeroForcing, TraceJson) {
  Graph p3 = test::path(3);
  auto j = nlohmann::json::parse(force_trace_json(derived_set(p3, LeaderSet(p3, {2}))));
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[0]["forcer"], 2);
  EXPECT_EQ(j[0]["forced"], 1);
}
