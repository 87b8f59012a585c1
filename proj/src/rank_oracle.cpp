#include "sscs/rank_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "sscs/zero_forcing.hpp"

namespace sscs {

bool WeightSample::integral() const {
  return std::all_of(weights.begin(), weights.end(), [](double w) { return std::floor(w) == w; });
}

WeightSample sample_weights(const Graph& g, std::uint64_t seed, WeightSpec spec) {
  if (spec.scheme == WeightScheme::integer && spec.max_weight < 1) {
    throw WeightError("integer weight scheme needs W >= 1");
  }
  WeightSample sample;
  sample.spec = spec;
  sample.seed = seed;
  sample.weights.assign(g.edge_count(), 0.0);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> int_dist(1, std::max<std::uint32_t>(spec.max_weight, 1));
  std::uniform_real_distribution<double> unit_dist(0.0, 1.0);
  auto draw = [&]() -> double {
    switch (spec.scheme) {
      case WeightScheme::unit: return 1.0;
      case WeightScheme::integer: return static_cast<double>(int_dist(rng));
      case WeightScheme::uniform: return 1.0 - unit_dist(rng);  // (0, 1]
    }
    return 1.0;
  };

  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [i, j] = edges[e];
    if (!g.directed() && i > j) continue;
    double w = draw();
    sample.weights[e] = w;
    if (!g.directed()) sample.weights[g.edge_index(j, i)] = w;
  }
  return sample;
}

namespace {

void validate_weights(const Graph& g, const WeightSample& w) {
  if (w.weights.size() != g.edge_count()) {
    throw WeightError("weight sample has " + std::to_string(w.weights.size()) + " entries for " +
                      std::to_string(g.edge_count()) + " edges");
  }
  for (std::size_t e = 0; e < w.weights.size(); ++e) {
    double value = w.weights[e];
    if (!(value > 0.0) || !std::isfinite(value)) {
      auto [i, j] = g.edges()[e];
      throw WeightError("non-positive weight on edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
}

template <typename T, typename Convert>
DenseMatrix<T> assemble_laplacian(const Graph& g, const WeightSample& w, Convert convert) {
  validate_weights(g, w);
  const std::size_t n = g.node_count();
  DenseMatrix<T> lap(n, n);
  const auto& edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [i, j] = edges[e];
    T value = convert(w.weights[e]);
    lap(i, j) -= value;
    lap(i, i) += value;
  }
  return lap;
}

template <typename T>
DenseMatrix<T> krylov_blocks(const DenseMatrix<T>& lap, const std::vector<NodeId>& leaders) {
  const std::size_t n = lap.rows();
  const std::size_t m = leaders.size();
  DenseMatrix<T> gamma(n, n * m);
  for (std::size_t k = 0; k < m; ++k) {
    if (leaders[k] >= n) throw StructuralError("invalid leader id " + std::to_string(leaders[k]));
    gamma(leaders[k], k) = 1;
  }
  T acc;
  for (std::size_t block = 1; block < n; ++block) {
    const std::size_t prev = (block - 1) * m;
    const std::size_t cur = block * m;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k < m; ++k) {
        acc = 0;
        for (std::size_t s = 0; s < n; ++s) {
          if (lap(r, s) != 0) acc -= lap(r, s) * gamma(s, prev + k);
        }
        gamma(r, cur + k) = acc;
      }
    }
  }
  return gamma;
}

}  // namespace

RealMatrix laplacian(const Graph& g, const WeightSample& w) {
  return assemble_laplacian<double>(g, w, [](double x) { return x; });
}

ExactMatrix laplacian_exact(const Graph& g, const WeightSample& w) {
  if (!w.integral()) throw WeightError("exact Laplacian needs whole-number weights");
  return assemble_laplacian<mpz_class>(g, w, [](double x) { return mpz_class(x); });
}

RealMatrix controllability_matrix(const RealMatrix& lap, const std::vector<NodeId>& leaders) {
  return krylov_blocks(lap, leaders);
}

ExactMatrix controllability_matrix(const ExactMatrix& lap, const std::vector<NodeId>& leaders) {
  return krylov_blocks(lap, leaders);
}

std::size_t rank_exact(const ExactMatrix& input) {
  ExactMatrix a = input;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  mpz_class prev_pivot = 1;
  mpz_class tmp;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        tmp = a(rank, c) * a(i, j) - a(i, c) * a(rank, j);
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev_pivot = a(rank, c);
    ++rank;
  }
  return rank;
}

std::size_t rank_numeric(const RealMatrix& m, RankTolerance tol) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::MatrixXd dense(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) dense(r, c) = m(r, c);
  }
  if (!dense.allFinite()) throw DecompositionError("matrix has non-finite entries");
  // Unit-norm columns: rank is unchanged, but Krylov columns otherwise span
  // dozens of orders of magnitude and swamp the relative threshold.
  for (Eigen::Index c = 0; c < dense.cols(); ++c) {
    double norm = dense.col(c).norm();
    if (norm > 0.0) dense.col(c) /= norm;
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(dense);
  if (svd.info() != Eigen::Success) throw DecompositionError("singular value decomposition failed");
  const Eigen::VectorXd& sigma = svd.singularValues();
  if (sigma.size() == 0) return 0;
  double threshold = tol.absolute.value_or(static_cast<double>(std::max(m.rows(), m.cols())) *
                                           std::numeric_limits<double>::epsilon() * sigma(0));
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > threshold) ++rank;
  }
  return rank;
}

std::size_t krylov_rank_numeric(const RealMatrix& lap, const std::vector<NodeId>& leaders, double drop_tol) {
  const auto n = static_cast<Eigen::Index>(lap.rows());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = -lap(i, j);
  }
  std::vector<Eigen::VectorXd> basis;
  std::vector<Eigen::VectorXd> frontier;
  for (NodeId l : leaders) {
    if (l >= lap.rows()) throw StructuralError("invalid leader id " + std::to_string(l));
    frontier.push_back(Eigen::VectorXd::Unit(n, l));
  }
  while (!frontier.empty() && basis.size() < lap.rows()) {
    std::vector<Eigen::VectorXd> next;
    for (auto& v : frontier) {
      const double before = v.norm();
      if (before == 0.0) continue;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : basis) v -= q.dot(v) * q;
      }
      const double after = v.norm();
      if (after > drop_tol * before) {
        v /= after;
        basis.push_back(v);
        next.push_back(a * v);
      }
    }
    frontier = std::move(next);
  }
  return basis.size();
}

RankResult controllability_rank(const Graph& g, const std::vector<NodeId>& leaders, const WeightSample& w,
                                std::size_t exact_cutoff) {
  if (g.node_count() <= exact_cutoff && w.integral()) {
    return {rank_exact(controllability_matrix(laplacian_exact(g, w), leaders)), true};
  }
  RealMatrix lap = laplacian(g, w);
  return {krylov_rank_numeric(lap, leaders, kKrylovDropTolerance * static_cast<double>(g.node_count())), false};
}

GammaEstimate gamma_upper_estimate(const Graph& g, const LeaderSet& leaders, const GammaOptions& options) {
  if (options.samples < 1) throw std::invalid_argument("gamma estimate needs at least one sample");
  GammaEstimate estimate;
  estimate.samples.resize(options.samples);

  auto run_sample = [&](std::size_t k) {
    auto start = std::chrono::steady_clock::now();
    WeightSample w = sample_weights(g, derive_seed(options.seed, k), options.spec);
    RankResult r = controllability_rank(g, leaders.ids(), w, options.exact_cutoff);
    auto stop = std::chrono::steady_clock::now();
    estimate.samples[k] = {w.seed, options.spec, r.rank, r.exact,
                           std::chrono::duration<double, std::milli>(stop - start).count()};
  };

  if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(options.samples); ++k) {
      run_sample(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < options.samples; ++k) run_sample(k);
  }

  estimate.gamma_upper = estimate.samples.front().rank;
  for (const auto& s : estimate.samples) estimate.gamma_upper = std::min(estimate.gamma_upper, s.rank);
  return estimate;
}

bool range_rank_invariance(const Graph& g, const LeaderSet& leaders, const WeightSample& w,
                           std::size_t exact_cutoff) {
  DerivedSet dset = derived_set(g, leaders);
  std::vector<NodeId> both = leaders.ids();
  both.insert(both.end(), dset.members.begin(), dset.members.end());
  // Gamma(L, both) spans the same columns as [Gamma(L, leaders), Gamma(L, dset)].
  std::size_t r_leaders = controllability_rank(g, leaders.ids(), w, exact_cutoff).rank;
  std::size_t r_dset = controllability_rank(g, dset.members, w, exact_cutoff).rank;
  std::size_t r_both = controllability_rank(g, both, w, exact_cutoff).rank;
  return r_leaders == r_dset && r_dset == r_both;
}

std::string sample_evidence_csv(const GammaEstimate& estimate) {
  std::ostringstream out;
  out << "seed,scheme,rank,runtime_ms\n";
  for (const auto& s : estimate.samples) {
    out << s.seed << ',' << to_string(s.spec.scheme);
    if (s.spec.scheme == WeightScheme::integer) out << '(' << s.spec.max_weight << ')';
    out << ',' << s.rank << ',' << s.runtime_ms << '\n';
  }
  return out.str();
}

WeightScheme parse_weight_scheme(const std::string& text) {
  if (text == "unit") return WeightScheme::unit;
  if (text == "integer") return WeightScheme::integer;
  if (text == "uniform") return WeightScheme::uniform;
  throw std::invalid_argument("weight scheme must be unit, integer or uniform (got '" + text + "')");
}

const char* to_string(WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::unit: return "unit";
    case WeightScheme::integer: return "integer";
    case WeightScheme::uniform: return "uniform";
  }
  return "?";
}

}  // namespace sscs
