#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sscs/bounds.hpp"
#include "sscs/graph.hpp"
#include "sscs/parallel.hpp"

namespace sscs {

// Batch checking of the bound relations over families of (graph, leaders)
// instances: every connected undirected graph up to a size, every small
// digraph with one leader, or a seeded random sample.

/// Every connected undirected graph on exactly n labelled nodes.
std::vector<Graph> connected_undirected_graphs(std::size_t n);
/// Every simple digraph on exactly n labelled nodes (connected or not).
std::vector<Graph> all_digraphs(std::size_t n);
/// All subsets of [0, n) with 1..max_size elements, ascending within each.
std::vector<std::vector<NodeId>> leader_subsets(std::size_t n, std::size_t max_size);

struct SuiteOptions {
  std::size_t max_n = 5;            // exhaustive: undirected graphs up to this size
  std::size_t max_leaders = 2;      // exhaustive: leader sets up to this size
  std::size_t directed_max_n = 4;   // exhaustive: single-leader digraphs up to this size
  std::size_t instances = 500;      // random suite size
  std::size_t random_max_n = 12;
  std::size_t random_max_m = 4;
  std::uint64_t seed = 1;
  std::size_t rank_samples = 3;
  WeightSpec weights;               // integer(1..100) by default
  std::size_t exact_cap = 12;       // exact delta for every instance in range
  Exec exec = Exec::parallel;
};

struct Tally {
  std::size_t not_applicable = 0;
  std::size_t verified = 0;
  std::size_t violated = 0;
  std::size_t inconclusive = 0;
  void add(Verdict v);
};

struct Counterexample {
  Graph graph;
  std::vector<NodeId> leaders;
  std::string report_csv;
};

inline constexpr std::size_t kFlagCount = 7;

struct SuiteResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t strict_combined = 0;  // combined > max(delta, zeta)
  std::array<Tally, kFlagCount> tallies{};
  std::vector<Counterexample> violations;
  std::vector<std::string> rows;    // report_csv_row per instance, in suite order


  bool ok() const { return violations.empty(); }
  /// Deterministic multi-line summary; identical inputs give identical text.
  std::string summary() const;
  /// "instance," + report_csv_header(), then one line per instance.
  std::string rows_csv() const;
};

/// Names of the flags in tally order.
const std::array<const char*, kFlagCount>& flag_names();

SuiteResult run_exhaustive_suite(const SuiteOptions& options);
SuiteResult run_random_suite(const SuiteOptions& options);

/// A random instance of the random suite, exposed for reproduction.
struct RandomInstance {
  Graph graph;
  std::vector<NodeId> leaders;
};
RandomInstance random_instance(const SuiteOptions& options, std::size_t index);

struct StrictCombinedWitness {
  Graph graph;
  std::vector<NodeId> leaders;
  std::size_t delta = 0;
  std::size_t zeta = 0;
  std::size_t combined = 0;
};

/// Scans connected undirected graphs by increasing n (up to max_n) and every
/// leader subset, with exact delta, for combined > max(delta, zeta). Returns
/// the first witness in enumeration order.
std::optional<StrictCombinedWitness> find_strict_combined(std::size_t max_n, Exec exec = Exec::parallel);

/// "graph ...\nedge ...\n" followed by "# leaders a,b,c".
std::string dump_counterexample(const Counterexample& c);

}  // namespace sscs
