#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sscs/graph.hpp"
#include "sscs/parallel.hpp"
#include "sscs/pmi.hpp"
#include "sscs/rank_oracle.hpp"

namespace sscs {

enum class Family { er, ba, path, cycle, star };

const char* to_string(Family f);
Family parse_family(const std::string& text);

/// Erdos-Renyi G(n, p): each unordered pair present independently with
/// probability p. Requires 0 < p < 1.
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

/// Barabasi-Albert preferential attachment. Starts from the complete graph
/// on max(eps, 2) nodes; each later node links to eps distinct existing
/// nodes drawn with probability proportional to current degree.
/// Requires 1 <= eps < n.
Graph gen_ba(std::size_t n, std::size_t eps, std::uint64_t seed);

/// Canonical path (0-1-...-n-1), cycle, or star centred at 0.
Graph gen_named(Family family, std::size_t n);

/// Uniformly random m-subset of [0, n), in draw order.
std::vector<NodeId> random_leaders(std::size_t n, std::size_t m, std::uint64_t seed);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilySpec {
  Family family = Family::er;
  double param = 0.0;  // p for ER, eps for BA, unused otherwise
};

struct EnsembleConfig {
  std::vector<FamilySpec> families;
  std::size_t n = 100;
  std::vector<std::size_t> leader_counts;
  std::size_t instances_per_point = 20;
  std::uint64_t seed = 1;
  PmiMode mode = PmiMode::automatic;
  std::size_t exact_cap = kDefaultExactCap;
  std::optional<std::size_t> rank_checks;  // K weight samples per instance
  WeightSpec weights;

  /// Throws ConfigError on any out-of-range field.
  void validate() const;
};

/// Accepts a single {"family", "param"} pair or a "families" list; the
/// remaining keys mirror EnsembleConfig.
EnsembleConfig parse_ensemble_config(const std::string& json_text);

struct InstanceRow {
  FamilySpec family;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t instance_seed = 0;
  std::size_t delta = 0;
  bool delta_exact = false;
  std::size_t zeta = 0;
  std::size_t combined = 0;
  bool combined_exact = false;
  std::optional<std::size_t> gamma_upper;
  bool ordering_ok = true;  // zeta <= combined, delta <= combined when both exact
  std::string error;        // non-empty when the instance failed
};

struct PointSummary {
  FamilySpec family;
  std::size_t m = 0;
  double mean_delta = 0.0;
  double mean_zeta = 0.0;
  double mean_combined = 0.0;
  std::size_t count = 0;
  std::size_t failures = 0;
  bool dset_always_leaders = true;  // zeta == m on every instance
};

struct SweepResult {
  std::vector<InstanceRow> rows;
  std::vector<PointSummary> points;
};

/// For every (family, m) point draws instances_per_point graphs and random
/// leader sets from per-instance derived seeds and computes all bounds.
/// Per-instance failures are recorded and the run continues. Serial and
/// parallel execution give identical results.
SweepResult run_ensemble(const EnsembleConfig& cfg, Exec exec = Exec::parallel);

/// family,param,n,m,instance_seed,delta,delta_exact,zeta,combined,combined_exact,gamma_upper
std::string instances_csv(const SweepResult& result);
/// family,param,m,mean_delta,mean_zeta,mean_combined,count
std::string summary_csv(const SweepResult& result);

}  // namespace sscs
