#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "sscs/graph.hpp"
#include "sscs/parallel.hpp"

namespace sscs {

/// Row-major dense matrix. Used with double for the numeric path and
/// mpz_class for the exact path.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<mpz_class>;
using RealMatrix = DenseMatrix<double>;

enum class WeightScheme { unit, integer, uniform };

struct WeightSpec {
  WeightScheme scheme = WeightScheme::integer;
  std::uint32_t max_weight = 100;  // W for the integer scheme, weights in 1..W
};

/// Positive weights aligned with Graph::edges(). Symmetric across the two
/// orientations of an undirected edge.
struct WeightSample {
  std::vector<double> weights;
  WeightSpec spec;
  std::uint64_t seed = 0;

  /// True when every weight is a whole number (exact arithmetic allowed).
  bool integral() const;
};

class WeightError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

WeightSample sample_weights(const Graph& g, std::uint64_t seed, WeightSpec spec = {});

/// L_w = Delta - A_w with [A_w]_ij = w(e_ij). Throws WeightError when the
/// sample does not cover exactly the edge set with positive values, or
/// (exact variant) when a weight is not a whole number.
RealMatrix laplacian(const Graph& g, const WeightSample& w);
ExactMatrix laplacian_exact(const Graph& g, const WeightSample& w);

/// [B, (-L)B, (-L)^2 B, ..., (-L)^{n-1} B], one n x m block per power,
/// each block obtained from the previous one by multiplying with -L.
RealMatrix controllability_matrix(const RealMatrix& lap, const std::vector<NodeId>& leaders);
ExactMatrix controllability_matrix(const ExactMatrix& lap, const std::vector<NodeId>& leaders);

/// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank_exact(const ExactMatrix& m);

/// Columns are scaled to unit norm, then singular values above tau count
/// toward the rank. By default tau = max(rows, cols) * eps * sigma_max;
/// `absolute` overrides it.
struct RankTolerance {
  std::optional<double> absolute;
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t rank_numeric(const RealMatrix& m, RankTolerance tol = {});

/// Dimension of the Krylov subspace spanned by [B, (-L)B, ...], built with
/// an orthonormal basis (block Arnoldi, two Gram-Schmidt passes). A new
/// direction is dropped when orthogonalisation shrinks it below
/// drop_tol times its original norm. Used instead of an SVD of the raw
/// controllability matrix once n is too large for that matrix to be
/// numerically meaningful.
std::size_t krylov_rank_numeric(const RealMatrix& lap, const std::vector<NodeId>& leaders, double drop_tol);
inline constexpr double kKrylovDropTolerance = 1e-10;  // scaled by n

/// Node counts up to this use exact arithmetic when weights are integral.
inline constexpr std::size_t kDefaultExactRankCutoff = 12;

/// rank of the controllability matrix for one weight sample; exact when
/// n <= exact_cutoff and weights are integral, numeric otherwise.
struct RankResult {
  std::size_t rank = 0;
  bool exact = false;
};
RankResult controllability_rank(const Graph& g, const std::vector<NodeId>& leaders, const WeightSample& w,
                                std::size_t exact_cutoff = kDefaultExactRankCutoff);

struct SampleEvidence {
  std::uint64_t seed = 0;
  WeightSpec spec;
  std::size_t rank = 0;
  bool exact = false;
  double runtime_ms = 0.0;
};

/// Minimum sampled rank; an upper estimate of the true minimum rank over
/// all positive weights.
struct GammaEstimate {
  std::size_t gamma_upper = 0;
  std::vector<SampleEvidence> samples;
};

struct GammaOptions {
  std::size_t samples = 5;
  WeightSpec spec;
  std::uint64_t seed = 1;
  std::size_t exact_cutoff = kDefaultExactRankCutoff;
  Exec exec = Exec::serial;
};

/// Sample k uses seed derive_seed(options.seed, k). The parallel path runs
/// samples concurrently and stores each result in its own slot.
GammaEstimate gamma_upper_estimate(const Graph& g, const LeaderSet& leaders, const GammaOptions& options);

/// rank Gamma(L_w, leaders) == rank Gamma(L_w, derived set) == rank of both
/// side by side: a rank-level certificate that the two ranges coincide.
bool range_rank_invariance(const Graph& g, const LeaderSet& leaders, const WeightSample& w,
                           std::size_t exact_cutoff = kDefaultExactRankCutoff);

/// seed,scheme,rank,runtime_ms
std::string sample_evidence_csv(const GammaEstimate& estimate);

WeightScheme parse_weight_scheme(const std::string& text);
const char* to_string(WeightScheme scheme);

}  // namespace sscs
