#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sscs/dl_distance.hpp"
#include "sscs/graph.hpp"
#include "sscs/pmi.hpp"
#include "sscs/rank_oracle.hpp"
#include "sscs/zero_forcing.hpp"

namespace sscs {

/// Outcome of one machine-checked implication.
enum class Verdict {
  not_applicable,  // hypothesis does not hold
  verified,        // hypothesis holds and the conclusion was confirmed
  violated,        // hypothesis holds and the conclusion failed
  inconclusive,    // needs an exact value that was not computed
};

const char* to_string(Verdict v);

struct TheoremFlags {
  // every leader has >= 2 follower in-neighbours => delta > zeta and zeta = m
  Verdict two_follower_in_neighbors = Verdict::not_applicable;
  // single leader, all distances finite, delta < n => delta > zeta
  Verdict single_leader_gap = Verdict::not_applicable;
  // delta = n => leaders form a zero forcing set
  Verdict full_delta_is_zfs = Verdict::not_applicable;
  // max(delta, zeta) <= combined
  Verdict combined_dominates = Verdict::not_applicable;
  // single leader, all distances finite => delta = max distance + 1
  Verdict single_leader_closed_form = Verdict::not_applicable;
  // delta, zeta, combined <= every sampled rank
  Verdict below_sampled_rank = Verdict::not_applicable;
  // rank Gamma(leaders) = rank Gamma(dset) = rank of both, per sample
  Verdict range_invariance = Verdict::not_applicable;

  bool any_violation() const;
  /// "name:verdict" pairs joined by '|'.
  std::string compact() const;
};

struct CombinedResult {
  DeltaResult delta;
  std::vector<NodeId> leaders;  // derived set, ascending
};

/// delta(g, dset(g, leaders)) with the derived set ordered by node id.
CombinedResult combined_bound(const Graph& g, const LeaderSet& leaders, PmiMode mode,
                              std::size_t cap = kDefaultExactCap);

struct RankEvidence {
  GammaEstimate estimate;
  std::size_t range_checks = 0;
  std::size_t range_failures = 0;
};

struct BoundsOptions {
  PmiMode mode = PmiMode::automatic;
  std::size_t exact_cap = kDefaultExactCap;
  bool with_rank = false;
  bool check_range = true;  // only used when with_rank
  GammaOptions gamma;
};

struct BoundsReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<NodeId> leaders;
  DLMatrix dl;
  DeltaResult delta;
  DerivedSet dset;
  std::size_t zeta = 0;
  DLMatrix combined_dl;
  CombinedResult combined;
  std::optional<RankEvidence> rank;
  TheoremFlags flags;

  std::optional<std::size_t> min_rank() const;
};

BoundsReport bounds_report(const Graph& g, const LeaderSet& leaders, const BoundsOptions& options = {});

/// Evaluates every implication the report can speak to. Conclusions that
/// follow from certified lower bounds are checked even without exact delta;
/// the rest are marked inconclusive in that case.
TheoremFlags check_theorems(const Graph& g, const LeaderSet& leaders, const BoundsReport& report);

std::string report_json(const BoundsReport& report);
std::string report_csv_header();
std::string report_csv_row(const BoundsReport& report);

}  // namespace sscs
