#include "sscs/bounds.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace sscs {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::not_applicable: return "n/a";
    case Verdict::verified: return "verified";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

template <typename F>
void for_each_flag(const TheoremFlags& f, F&& visit) {
  visit("two_follower_in_neighbors", f.two_follower_in_neighbors);
  visit("single_leader_gap", f.single_leader_gap);
  visit("full_delta_is_zfs", f.full_delta_is_zfs);
  visit("combined_dominates", f.combined_dominates);
  visit("single_leader_closed_form", f.single_leader_closed_form);
  visit("below_sampled_rank", f.below_sampled_rank);
  visit("range_invariance", f.range_invariance);
}

// verified when `holds`; otherwise violated if the values involved were
// exact, inconclusive if they were only lower bounds.
Verdict conclude(bool holds, bool exact) {
  if (holds) return Verdict::verified;
  return exact ? Verdict::violated : Verdict::inconclusive;
}

}  // namespace

bool TheoremFlags::any_violation() const {
  bool violated = false;
  for_each_flag(*this, [&](const char*, Verdict v) { violated = violated || v == Verdict::violated; });
  return violated;
}

std::string TheoremFlags::compact() const {
  std::string out;
  for_each_flag(*this, [&](const char* name, Verdict v) {
    if (!out.empty()) out += '|';
    out += name;
    out += ':';
    out += to_string(v);
  });
  return out;
}

CombinedResult combined_bound(const Graph& g, const LeaderSet& leaders, PmiMode mode, std::size_t cap) {
  DerivedSet dset = derived_set(g, leaders);
  CombinedResult result;
  result.leaders = dset.members;
  result.delta = delta(g, LeaderSet(g, dset.members), mode, cap);
  return result;
}

std::optional<std::size_t> BoundsReport::min_rank() const {
  if (!rank) return std::nullopt;
  return rank->estimate.gamma_upper;
}

BoundsReport bounds_report(const Graph& g, const LeaderSet& leaders, const BoundsOptions& options) {
  BoundsReport r;
  r.n = g.node_count();
  r.m = leaders.size();
  r.leaders = leaders.ids();
  r.dl = dl_matrix(g, leaders);
  r.delta = delta_from_dl(r.dl, options.mode, options.exact_cap);
  r.dset = derived_set(g, leaders);
  r.zeta = r.dset.size();

  LeaderSet enlarged(g, r.dset.members);
  r.combined_dl = dl_matrix(g, enlarged);
  r.combined.leaders = r.dset.members;
  r.combined.delta = delta_from_dl(r.combined_dl, options.mode, options.exact_cap);

  if (options.with_rank) {
    RankEvidence evidence;
    evidence.estimate = gamma_upper_estimate(g, leaders, options.gamma);
    if (options.check_range) {
      for (const auto& s : evidence.estimate.samples) {
        WeightSample w = sample_weights(g, s.seed, s.spec);
        ++evidence.range_checks;
        if (!range_rank_invariance(g, leaders, w, options.gamma.exact_cutoff)) ++evidence.range_failures;
      }
    }
    r.rank = std::move(evidence);
  }
  r.flags = check_theorems(g, leaders, r);
  return r;
}

TheoremFlags check_theorems(const Graph& g, const LeaderSet& leaders, const BoundsReport& report) {
  TheoremFlags flags;
  const std::size_t n = report.n;
  const std::size_t m = report.m;
  const std::size_t d = report.delta.length;
  const bool d_exact = report.delta.exact;
  const std::size_t z = report.zeta;
  const std::size_t c = report.combined.delta.length;
  const bool c_exact = report.combined.delta.exact;

  bool hyp_two_followers = true;
  for (NodeId l : leaders) {
    std::size_t followers = 0;
    for (NodeId u : g.in_neighbors(l)) {
      if (!leaders.contains(u)) ++followers;
    }
    if (followers < 2) hyp_two_followers = false;
  }
  if (hyp_two_followers) {
    // zeta = m needs no exactness; delta > zeta can be certified by a lower bound.
    if (z != m) {
      flags.two_follower_in_neighbors = Verdict::violated;
    } else {
      flags.two_follower_in_neighbors = conclude(d > z, d_exact);
    }
  }

  bool all_finite = true;
  Distance max_dist = 0;
  if (m == 1) {
    for (std::size_t v = 0; v < n; ++v) {
      Distance dv = report.dl.at(v, 0);
      if (!is_finite(dv)) {
        all_finite = false;
      } else {
        max_dist = std::max(max_dist, dv);
      }
    }
    if (all_finite) {
      if (!d_exact) {
        flags.single_leader_closed_form = Verdict::inconclusive;
        flags.single_leader_gap = Verdict::inconclusive;
      } else {
        flags.single_leader_closed_form = conclude(d == static_cast<std::size_t>(max_dist) + 1, true);
        if (d < n) flags.single_leader_gap = conclude(d > z, true);
      }
    }
  }

  // A sequence of length n certifies delta = n even when found greedily.
  if (d == n) flags.full_delta_is_zfs = (z == n) ? Verdict::verified : Verdict::violated;

  // Greedy also places every leader's own vector first, so combined >= |dset|
  // holds in every mode; only delta <= combined needs both values exact.
  if (c < z) {
    flags.combined_dominates = Verdict::violated;
  } else if (c < d) {
    flags.combined_dominates = (c_exact && d_exact) ? Verdict::violated : Verdict::inconclusive;
  } else {
    flags.combined_dominates = Verdict::verified;
  }

  if (report.rank) {
    bool below = true;
    for (const auto& s : report.rank->estimate.samples) {
      below = below && d <= s.rank && z <= s.rank && c <= s.rank;
    }
    // Every reported bound is backed by a valid sequence or derived set, so
    // exceeding a sampled rank is always a violation.
    flags.below_sampled_rank = below ? Verdict::verified : Verdict::violated;
    if (report.rank->range_checks > 0) {
      flags.range_invariance = report.rank->range_failures == 0 ? Verdict::verified : Verdict::violated;
    }
  }
  return flags;
}

namespace {

nlohmann::json delta_json(const DLMatrix& dl, const DeltaResult& res) {
  return {{"length", res.length},
          {"exact", res.exact},
          {"sequence", nlohmann::json::parse(pmi_sequence_json(dl, res.sequence))}};
}

}  // namespace

std::string report_json(const BoundsReport& r) {
  nlohmann::json out;
  out["n"] = r.n;
  out["m"] = r.m;
  out["leaders"] = r.leaders;
  out["delta"] = delta_json(r.dl, r.delta);
  out["zeta"] = r.zeta;
  out["derived_set"] = r.dset.members;
  out["combined"] = delta_json(r.combined_dl, r.combined.delta);
  if (r.rank) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.rank->estimate.samples) {
      samples.push_back({{"seed", s.seed}, {"scheme", to_string(s.spec.scheme)}, {"rank", s.rank}, {"exact", s.exact}});
    }
    out["gamma_upper"] = r.rank->estimate.gamma_upper;
    out["samples"] = samples;
  } else {
    out["gamma_upper"] = nullptr;
  }
  nlohmann::json flags;
  for_each_flag(r.flags, [&](const char* name, Verdict v) { flags[name] = to_string(v); });
  out["theorem_flags"] = flags;
  return out.dump(2);
}

std::string report_csv_header() { return "n,m,delta,delta_exact,zeta,combined,combined_exact,min_rank,flags"; }

std::string report_csv_row(const BoundsReport& r) {
  std::ostringstream out;
  out << r.n << ',' << r.m << ',' << r.delta.length << ',' << (r.delta.exact ? 1 : 0) << ',' << r.zeta << ','
      << r.combined.delta.length << ',' << (r.combined.delta.exact ? 1 : 0) << ',';
  if (auto mr = r.min_rank()) out << *mr;
  out << ',' << r.flags.compact();
  return out.str();
}

}  // namespace sscs
