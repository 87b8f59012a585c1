#include <gtest/gtest.h>

#include <cmath>

#include "sscs/rank_oracle.hpp"
#include "test_support.hpp"

using namespace sscs;

namespace {

const WeightSpec kUnit{WeightScheme::unit, 1};

// textbook elimination over the rationals
std::size_t rational_rank(const ExactMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) a[r][c] = m(r, c);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t p = rank;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows(); ++r) {
      if (a[r][c] == 0) continue;
      mpq_class f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

ExactMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  std::uniform_int_distribution<int> entry(-3, 3);
  ExactMatrix a(rows, inner), b(inner, cols), out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < inner; ++k) a(i, k) = entry(rng);
  for (std::size_t k = 0; k < inner; ++k)
    for (std::size_t j = 0; j < cols; ++j) b(k, j) = entry(rng);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t k = 0; k < inner; ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

RealMatrix to_real(const ExactMatrix& m) {
  RealMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).get_d();
  return r;
}

}  // namespace

TEST(RankOracle, PathLaplacian) {
  Graph g = test::path(3);
  WeightSample w = sample_weights(g, 1, kUnit);
  RealMatrix l = laplacian(g, w);
  const double want[3][3] = {{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(l(i, j), want[i][j]);
  ExactMatrix le = laplacian_exact(g, w);
  EXPECT_EQ(le(1, 1), 2);
  EXPECT_EQ(le(0, 2), 0);
}

TEST(RankOracle, SingleNodeLaplacianIsZero) {
  Graph g = test::make(1, false, {});
  RealMatrix l = laplacian(g, sample_weights(g, 1));
  EXPECT_EQ(l.rows(), 1u);
  EXPECT_EQ(l(0, 0), 0.0);
}

TEST(RankOracle, PathControllabilityMatrix) {
  Graph g = test::path(3);
  ExactMatrix gamma = controllability_matrix(laplacian_exact(g, sample_weights(g, 1, kUnit)), {0});
  ASSERT_EQ(gamma.rows(), 3u);
  ASSERT_EQ(gamma.cols(), 3u);
  const int want[3][3] = {{1, -1, 2}, {0, 1, -3}, {0, 0, 1}};  // columns B, -LB, L^2 B
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(gamma(i, j), want[i][j]) << i << "," << j;
  EXPECT_EQ(rank_exact(gamma), 3u);
}

TEST(RankOracle, LaplacianRowsSumToZeroAndKrylovRecurrence) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 9;
    Graph g = test::random_graph(rng, n, rng() % 2 == 0, 0.4);
    WeightSample w = sample_weights(g, rng());
    ExactMatrix l = laplacian_exact(g, w);
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class sum = 0;
      for (std::size_t j = 0; j < n; ++j) sum += l(i, j);
      EXPECT_EQ(sum, 0);
    }
    auto leaders = test::random_subset(rng, n, 1 + rng() % n);
    const std::size_t m = leaders.size();
    ExactMatrix gamma = controllability_matrix(l, leaders);
    ASSERT_EQ(gamma.cols(), n * m);
    // block k+1 = -L * block k
    for (std::size_t k = 0; k + 1 < n; ++k)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t i = 0; i < n; ++i) {
          mpz_class acc = 0;
          for (std::size_t j = 0; j < n; ++j) acc -= l(i, j) * gamma(j, k * m + c);
          ASSERT_EQ(gamma(i, (k + 1) * m + c), acc);
        }
  }
}

TEST(RankOracle, ExactRankKnownMatrices) {
  EXPECT_EQ(rank_exact(ExactMatrix(4, 3)), 0u);
  ExactMatrix id(5, 5);
  for (int i = 0; i < 5; ++i) id(i, i) = 1;
  EXPECT_EQ(rank_exact(id), 5u);
  ExactMatrix outer(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) outer(i, j) = (i + 1) * (j - 2);
  EXPECT_EQ(rank_exact(outer), 1u);
  EXPECT_EQ(rank_exact(ExactMatrix()), 0u);
}

TEST(RankOracle, ExactRankMatchesRationalElimination) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8, inner = 1 + rng() % 8;
    ExactMatrix m = random_low_rank(rng, rows, cols, inner);
    ASSERT_EQ(rank_exact(m), rational_rank(m));
  }
}

TEST(RankOracle, NumericRankKnownMatrices) {
  RealMatrix id(5, 5);
  for (int i = 0; i < 5; ++i) id(i, i) = 1.0;
  EXPECT_EQ(rank_numeric(id), 5u);
  RealMatrix outer(4, 6);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 6; ++j) outer(i, j) = (i + 1.5) * (j - 2.25);
  EXPECT_EQ(rank_numeric(outer), 1u);
  EXPECT_EQ(rank_numeric(RealMatrix(3, 3)), 0u);
  EXPECT_EQ(rank_numeric(id, RankTolerance{2.0}), 0u);
  RealMatrix bad(2, 2);
  bad(0, 0) = std::nan("");
  EXPECT_THROW(rank_numeric(bad), DecompositionError);
}

TEST(RankOracle, NumericAgreesWithExactOnIntegerMatrices) {
  std::mt19937_64 rng(39);
  for (int t = 0; t < 200; ++t) {
    ExactMatrix m = random_low_rank(rng, 1 + rng() % 8, 1 + rng() % 8, 1 + rng() % 8);
    ASSERT_EQ(rank_numeric(to_real(m)), rank_exact(m));
  }
}

TEST(RankOracle, KnownGraphRanks) {
  Graph p3 = test::path(3);
  Graph k3 = test::complete(3);
  Graph s4 = test::star(4);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    EXPECT_EQ(controllability_rank(p3, {0}, sample_weights(p3, seed)).rank, 3u);
  }
  // symmetric weights keep the symmetric followers indistinguishable
  EXPECT_EQ(controllability_rank(k3, {0}, sample_weights(k3, 1, kUnit)).rank, 2u);
  EXPECT_EQ(controllability_rank(s4, {0}, sample_weights(s4, 1, kUnit)).rank, 2u);
  // generic weights separate them: 1 + number of distinct leaf weights
  WeightSample w = sample_weights(s4, 1, kUnit);
  for (std::size_t e = 0; e < s4.edge_count(); ++e) {
    auto [i, j] = s4.edges()[e];
    w.weights[e] = static_cast<double>(std::max(i, j));
  }
  EXPECT_EQ(controllability_rank(s4, {0}, w).rank, 4u);
  for (std::size_t e = 0; e < s4.edge_count(); ++e) {
    auto [i, j] = s4.edges()[e];
    if (std::max(i, j) == 3) w.weights[e] = 2.0;
  }
  EXPECT_EQ(controllability_rank(s4, {0}, w).rank, 3u);
  EXPECT_TRUE(controllability_rank(p3, {0}, sample_weights(p3, 1)).exact);
  EXPECT_FALSE(controllability_rank(p3, {0}, sample_weights(p3, 1, {WeightScheme::uniform, 1})).exact);
}

TEST(RankOracle, GammaOnSymmetricExamples) {
  GammaOptions opts;
  opts.spec = kUnit;
  Graph k3 = test::complete(3);
  Graph s4 = test::star(4);
  opts.samples = 1;
  EXPECT_EQ(gamma_upper_estimate(k3, LeaderSet(k3, {0}), opts).gamma_upper, 2u);
  opts.samples = 10;
  EXPECT_EQ(gamma_upper_estimate(s4, LeaderSet(s4, {0}), opts).gamma_upper, 2u);
  // random integer weights only give an upper estimate, never below delta = 2
  opts.spec = {};
  EXPECT_GE(gamma_upper_estimate(s4, LeaderSet(s4, {0}), opts).gamma_upper, 2u);
}

TEST(RankOracle, KrylovPathAgreesWithExact) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 11;
    Graph g = test::random_graph(rng, n, rng() % 2 == 0, 0.3);
    auto leaders = test::random_subset(rng, n, 1 + rng() % std::min<std::size_t>(4, n));
    WeightSample w = sample_weights(g, rng());
    EXPECT_EQ(krylov_rank_numeric(laplacian(g, w), leaders, kKrylovDropTolerance * n),
              controllability_rank(g, leaders, w).rank);
  }
}

TEST(RankOracle, WeightsAreSymmetricPositiveAndSeeded) {
  std::mt19937_64 rng(57);
  Graph g = test::random_graph(rng, 9, false, 0.5);
  for (WeightScheme s : {WeightScheme::unit, WeightScheme::integer, WeightScheme::uniform}) {
    WeightSample w = sample_weights(g, 99, {s, 7});
    ASSERT_EQ(w.weights.size(), g.edge_count());
    for (auto [i, j] : g.edges()) {
      double a = w.weights[g.edge_index(i, j)];
      EXPECT_GT(a, 0.0);
      EXPECT_EQ(a, w.weights[g.edge_index(j, i)]);
      if (s == WeightScheme::integer) {
        EXPECT_LE(a, 7.0);
        EXPECT_EQ(a, std::floor(a));
      }
      if (s == WeightScheme::uniform) EXPECT_LE(a, 1.0);
    }
    EXPECT_EQ(sample_weights(g, 99, {s, 7}).weights, w.weights);
  }
  EXPECT_NE(sample_weights(g, 1).weights, sample_weights(g, 2).weights);
}

TEST(RankOracle, WeightErrors) {
  Graph g = test::path(3);
  EXPECT_THROW(sample_weights(g, 1, {WeightScheme::integer, 0}), WeightError);
  WeightSample w = sample_weights(g, 1);
  w.weights.pop_back();
  EXPECT_THROW(laplacian(g, w), WeightError);
  WeightSample z = sample_weights(g, 1);
  z.weights[0] = 0.0;
  EXPECT_THROW(laplacian(g, z), WeightError);
  WeightSample f = sample_weights(g, 1, {WeightScheme::uniform, 1});
  EXPECT_THROW(laplacian_exact(g, f), WeightError);
  EXPECT_THROW(controllability_matrix(laplacian(g, sample_weights(g, 1)), {3}), StructuralError);
  EXPECT_THROW(parse_weight_scheme("gaussian"), std::invalid_argument);
  EXPECT_EQ(parse_weight_scheme("uniform"), WeightScheme::uniform);
}

TEST(RankOracle, GammaSerialMatchesParallel) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 3 + rng() % 20;
    Graph g = test::random_graph(rng, n, false, 0.3);
    LeaderSet leaders(g, test::random_subset(rng, n, 1 + rng() % 3));
    GammaOptions opts;
    opts.samples = 4;
    opts.seed = rng();
    opts.exec = Exec::serial;
    GammaEstimate a = gamma_upper_estimate(g, leaders, opts);
    opts.exec = Exec::parallel;
    GammaEstimate b = gamma_upper_estimate(g, leaders, opts);
    EXPECT_EQ(a.gamma_upper, b.gamma_upper);
    ASSERT_EQ(a.samples.size(), 4u);
    for (std::size_t k = 0; k < 4; ++k) {
      EXPECT_EQ(a.samples[k].seed, derive_seed(opts.seed, k));
      EXPECT_EQ(a.samples[k].seed, b.samples[k].seed);
      EXPECT_EQ(a.samples[k].rank, b.samples[k].rank);
    }
  }
}

TEST(RankOracle, GammaEvidence) {
  Graph g = test::path(3);
  GammaOptions opts;
  opts.samples = 3;
  GammaEstimate e = gamma_upper_estimate(g, LeaderSet(g, {0}), opts);
  EXPECT_EQ(e.gamma_upper, 3u);
  std::string csv = sample_evidence_csv(e);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "seed,scheme,rank,runtime_ms");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
  opts.samples = 0;
  EXPECT_THROW(gamma_upper_estimate(g, LeaderSet(g, {0}), opts), std::invalid_argument);
}

TEST(RankOracle, RangeInvariance) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng() % 9;
    Graph g = test::random_graph(rng, n, rng() % 2 == 0, 0.35);
    LeaderSet leaders(g, test::random_subset(rng, n, 1 + rng() % std::min<std::size_t>(3, n)));
    EXPECT_TRUE(range_rank_invariance(g, leaders, sample_weights(g, rng())));
  }
}
