#include <gtest/gtest.h>

#include <cmath>

#include "sscs/ensemble.hpp"
#include "test_support.hpp"

using namespace sscs;

namespace {

std::size_t max_degree(const Graph& g) {
  std::size_t best = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) best = std::max(best, g.out_neighbors(v).size());
  return best;
}

}  // namespace

TEST(Generators, ErEdgeCount) {
  const std::size_t n = 100;
  const double p = 0.05;
  const double pairs = n * (n - 1) / 2.0;
  const double sigma = std::sqrt(pairs * p * (1 - p));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Graph g = gen_er(n, p, seed);
    EXPECT_FALSE(g.directed());
    EXPECT_LT(std::abs(g.edge_count() / 2.0 - pairs * p), 4 * sigma) << seed;
  }
  EXPECT_EQ(gen_er(30, 0.2, 9), gen_er(30, 0.2, 9));
  EXPECT_THROW(gen_er(10, 1.5, 1), ConfigError);
  EXPECT_THROW(gen_er(10, 0.0, 1), ConfigError);
}

TEST(Generators, BaDegrees) {
  for (std::size_t eps : {1, 2, 5}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      Graph g = gen_ba(100, eps, seed);
      const std::size_t core = std::max<std::size_t>(eps, 2);
      const std::size_t expected = core * (core - 1) / 2 + (100 - core) * eps;
      EXPECT_EQ(g.edge_count(), 2 * expected);
      for (NodeId v = 0; v < 100; ++v) EXPECT_GE(g.out_neighbors(v).size(), eps);
    }
  }
  EXPECT_EQ(gen_ba(6, 5, 3), test::complete(6));
  EXPECT_THROW(gen_ba(5, 5, 1), ConfigError);
  EXPECT_THROW(gen_ba(5, 0, 1), ConfigError);
}

TEST(Generators, BaHasHeavierTailThanEr) {
  // same mean degree; preferential attachment should produce larger hubs
  std::size_t wins = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Graph ba = gen_ba(200, 2, seed);
    Graph er = gen_er(200, 4.0 / 199.0, seed);
    if (max_degree(ba) > max_degree(er)) ++wins;
  }
  EXPECT_GE(wins, 90u);
}

TEST(Generators, NamedFamilies) {
  EXPECT_EQ(gen_named(Family::path, 5), test::path(5));
  EXPECT_EQ(gen_named(Family::cycle, 5), test::cycle(5));
  EXPECT_EQ(gen_named(Family::star, 5), test::star(5));
  EXPECT_EQ(gen_named(Family::cycle, 2), test::path(2));
  EXPECT_EQ(gen_named(Family::path, 1).edge_count(), 0u);
  EXPECT_THROW(gen_named(Family::star, 1), ConfigError);
  EXPECT_THROW(gen_named(Family::er, 5), ConfigError);
  EXPECT_EQ(parse_family("ba"), Family::ba);
  EXPECT_THROW(parse_family("ws"), ConfigError);
}

TEST(Generators, RandomLeaders) {
  auto l = random_leaders(20, 7, 5);
  ASSERT_EQ(l.size(), 7u);
  auto s = l;
  std::sort(s.begin(), s.end());
  EXPECT_EQ(std::unique(s.begin(), s.end()), s.end());
  EXPECT_EQ(random_leaders(20, 7, 5), l);
  EXPECT_EQ(random_leaders(4, 4, 1).size(), 4u);
  EXPECT_THROW(random_leaders(4, 5, 1), ConfigError);
}

TEST(EnsembleConfig, Parsing) {
  EnsembleConfig c = parse_ensemble_config(
      R"({"family": "er", "param": 0.1, "n": 40, "leader_counts": [2, 5], "instances_per_point": 3,
          "seed": 7, "mode": "greedy", "rank_checks": 2, "weights": "unit"})");
  ASSERT_EQ(c.families.size(), 1u);
  EXPECT_EQ(c.families[0].family, Family::er);
  EXPECT_EQ(c.n, 40u);
  EXPECT_EQ(c.leader_counts, (std::vector<std::size_t>{2, 5}));
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.mode, PmiMode::greedy);
  EXPECT_EQ(c.rank_checks, 2u);
  EXPECT_EQ(c.weights.scheme, WeightScheme::unit);

  EnsembleConfig multi = parse_ensemble_config(
      R"({"families": [{"family": "ba", "param": 2}, {"family": "path"}], "n": 10, "leader_counts": [1]})");
  EXPECT_EQ(multi.families.size(), 2u);

  EXPECT_THROW(parse_ensemble_config(R"({"family": "er", "param": 1.5, "n": 10, "leader_counts": [1]})"),
               ConfigError);
  EXPECT_THROW(parse_ensemble_config(R"({"family": "er", "param": 0.1, "n": 10, "leader_counts": [11]})"),
               ConfigError);
  EXPECT_THROW(parse_ensemble_config(R"({"family": "ba", "param": 10, "n": 10, "leader_counts": [1]})"),
               ConfigError);
  EXPECT_THROW(parse_ensemble_config(R"({"n": 10, "leader_counts": [1]})"), ConfigError);
  EXPECT_THROW(parse_ensemble_config("{"), ConfigError);
  EXPECT_THROW(parse_ensemble_config(R"({"family": "er", "param": 0.1, "n": "ten", "leader_counts": [1]})"),
               ConfigError);
}

TEST(Ensemble, SerialMatchesParallelAndReruns) {
  EnsembleConfig c = parse_ensemble_config(
      R"({"families": [{"family": "er", "param": 0.1}, {"family": "ba", "param": 2}], "n": 30,
          "leader_counts": [1, 3, 30], "instances_per_point": 4, "rank_checks": 2})");
  SweepResult a = run_ensemble(c, Exec::serial);
  SweepResult b = run_ensemble(c, Exec::parallel);
  EXPECT_EQ(instances_csv(a), instances_csv(b));
  EXPECT_EQ(summary_csv(a), summary_csv(b));
  EXPECT_EQ(instances_csv(a), instances_csv(run_ensemble(c, Exec::parallel)));
  EXPECT_EQ(a.rows.size(), 2u * 3u * 4u);
  EXPECT_EQ(a.points.size(), 6u);
  for (const auto& row : a.rows) {
    EXPECT_TRUE(row.error.empty()) << row.error;
    EXPECT_TRUE(row.ordering_ok);
    EXPECT_LE(row.zeta, row.combined);
    ASSERT_TRUE(row.gamma_upper.has_value());
    EXPECT_LE(row.combined, *row.gamma_upper);
  }
  for (const auto& p : a.points) {
    if (p.m == 30) {
      EXPECT_EQ(p.mean_delta, 30.0);
      EXPECT_EQ(p.mean_zeta, 30.0);
      EXPECT_EQ(p.mean_combined, 30.0);
    }
  }
}

TEST(Ensemble, CsvSchemas) {
  EnsembleConfig c = parse_ensemble_config(
      R"({"family": "path", "n": 6, "leader_counts": [1], "instances_per_point": 2})");
  SweepResult r = run_ensemble(c);
  std::string inst = instances_csv(r);
  EXPECT_EQ(inst.substr(0, inst.find('\n')),
            "family,param,n,m,instance_seed,delta,delta_exact,zeta,combined,combined_exact,gamma_upper");
  std::string sum = summary_csv(r);
  EXPECT_EQ(sum.substr(0, sum.find('\n')), "family,param,m,mean_delta,mean_zeta,mean_combined,count");
  EXPECT_EQ(std::count(sum.begin(), sum.end(), '\n'), 2);
}
