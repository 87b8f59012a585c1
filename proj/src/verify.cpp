#include "sscs/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "sscs/ensemble.hpp"

namespace sscs {

void Tally::add(Verdict v) {
  switch (v) {
    case Verdict::not_applicable: ++not_applicable; break;
    case Verdict::verified: ++verified; break;
    case Verdict::violated: ++violated; break;
    case Verdict::inconclusive: ++inconclusive; break;
  }
}

const std::array<const char*, kFlagCount>& flag_names() {
  static const std::array<const char*, kFlagCount> names = {
      "two_follower_in_neighbors", "single_leader_gap",  "full_delta_is_zfs", "combined_dominates",
      "single_leader_closed_form", "below_sampled_rank", "range_invariance",
  };
  return names;
}

namespace {

std::array<Verdict, kFlagCount> flag_values(const TheoremFlags& f) {
  return {f.two_follower_in_neighbors, f.single_leader_gap,  f.full_delta_is_zfs, f.combined_dominates,
          f.single_leader_closed_form, f.below_sampled_rank, f.range_invariance};
}

std::vector<Edge> unordered_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

bool mask_connected(std::size_t n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<NodeId> parent(n);
  for (NodeId v = 0; v < n; ++v) parent[v] = v;
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = n;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if (!((mask >> e) & 1U)) continue;
    NodeId a = find(pairs[e].first);
    NodeId b = find(pairs[e].second);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Graph graph_from_mask(std::size_t n, bool directed, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<Edge> chosen;
  for (std::size_t e = 0; e < pairs.size(); ++e) {
    if ((mask >> e) & 1U) chosen.push_back(pairs[e]);
  }
  return Graph::from_edge_list(n, directed, chosen);
}

struct Job {
  const Graph* graph = nullptr;
  std::vector<NodeId> leaders;
  std::uint64_t seed = 0;
};

struct JobOutcome {
  TheoremFlags flags;
  bool strict = false;
  std::string csv;
  std::string error;
};

JobOutcome run_job(const Job& job, const SuiteOptions& options) {
  JobOutcome out;
  try {
    LeaderSet leaders(*job.graph, job.leaders);
    BoundsOptions opts;
    opts.mode = PmiMode::automatic;
    opts.exact_cap = options.exact_cap;
    opts.with_rank = options.rank_samples > 0;
    opts.check_range = true;
    opts.gamma.samples = std::max<std::size_t>(options.rank_samples, 1);
    opts.gamma.spec = options.weights;
    opts.gamma.seed = job.seed;
    BoundsReport report = bounds_report(*job.graph, leaders, opts);
    out.flags = report.flags;
    out.strict = report.combined.delta.length > std::max(report.delta.length, report.zeta);
    out.csv = report_csv_row(report);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

SuiteResult run_jobs(std::string name, const std::vector<Job>& jobs, const SuiteOptions& options) {
  std::vector<JobOutcome> outcomes(jobs.size());
  if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(jobs.size()); ++k) {
      outcomes[k] = run_job(jobs[k], options);
    }
  } else {
    for (std::size_t k = 0; k < jobs.size(); ++k) outcomes[k] = run_job(jobs[k], options);
  }

  SuiteResult result;
  result.name = std::move(name);
  result.instances = jobs.size();
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    const auto& o = outcomes[k];
    auto values = flag_values(o.flags);
    for (std::size_t f = 0; f < kFlagCount; ++f) result.tallies[f].add(values[f]);
    if (o.strict) ++result.strict_combined;
    result.rows.push_back(o.error.empty() ? o.csv : "error: " + o.error);
    if (!o.error.empty() || o.flags.any_violation()) {
      result.violations.push_back({*jobs[k].graph, jobs[k].leaders, o.error.empty() ? o.csv : "error: " + o.error});
    }
  }
  return result;
}

}  // namespace

std::vector<Graph> connected_undirected_graphs(std::size_t n) {
  std::vector<Graph> graphs;
  if (n == 0) return graphs;
  auto pairs = unordered_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (mask_connected(n, pairs, mask)) graphs.push_back(graph_from_mask(n, false, pairs, mask));
  }
  return graphs;
}

std::vector<Graph> all_digraphs(std::size_t n) {
  std::vector<Graph> graphs;
  if (n == 0) return graphs;
  std::vector<Edge> arcs;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i != j) arcs.emplace_back(i, j);
    }
  }
  const std::uint64_t total = std::uint64_t{1} << arcs.size();
  graphs.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) graphs.push_back(graph_from_mask(n, true, arcs, mask));
  return graphs;
}

std::vector<std::vector<NodeId>> leader_subsets(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<NodeId>> subsets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) > max_size) continue;
    std::vector<NodeId> s;
    for (NodeId v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.push_back(v);
    }
    subsets.push_back(std::move(s));
  }
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return subsets;
}

SuiteResult run_exhaustive_suite(const SuiteOptions& options) {
  std::vector<std::vector<Graph>> pools;
  std::vector<Job> jobs;
  for (std::size_t n = 1; n <= options.max_n; ++n) pools.push_back(connected_undirected_graphs(n));
  for (std::size_t n = 1; n <= options.directed_max_n; ++n) pools.push_back(all_digraphs(n));

  std::uint64_t counter = 0;
  for (const auto& pool : pools) {
    for (const Graph& g : pool) {
      const std::size_t max_size = g.directed() ? 1 : options.max_leaders;
      for (auto& subset : leader_subsets(g.node_count(), max_size)) {
        jobs.push_back({&g, std::move(subset), derive_seed(options.seed, counter++)});
      }
    }
  }
  return run_jobs("exhaustive", jobs, options);
}

RandomInstance random_instance(const SuiteOptions& options, std::size_t index) {
  const std::uint64_t seed = derive_seed(options.seed, index);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> size_dist(2, std::max<std::size_t>(options.random_max_n, 2));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size_dist(rng);
  const bool directed = unit(rng) < 0.5;
  const double p = 0.15 + 0.55 * unit(rng);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 0; j < n; ++j) {
      if (i == j || (!directed && j < i)) continue;
      if (unit(rng) < p) edges.emplace_back(i, j);
    }
  }
  std::uniform_int_distribution<std::size_t> m_dist(1, std::min(options.random_max_m, n));
  const std::size_t m = m_dist(rng);
  return {Graph::from_edge_list(n, directed, edges), random_leaders(n, m, derive_seed(seed, 1))};
}

SuiteResult run_random_suite(const SuiteOptions& options) {
  std::vector<Graph> graphs;
  std::vector<std::vector<NodeId>> leader_sets;
  graphs.reserve(options.instances);
  for (std::size_t i = 0; i < options.instances; ++i) {
    auto inst = random_instance(options, i);
    graphs.push_back(std::move(inst.graph));
    leader_sets.push_back(std::move(inst.leaders));
  }
  std::vector<Job> jobs;
  for (std::size_t i = 0; i < options.instances; ++i) {
    jobs.push_back({&graphs[i], leader_sets[i], derive_seed(derive_seed(options.seed, i), 2)});
  }
  return run_jobs("random", jobs, options);
}

std::optional<StrictCombinedWitness> find_strict_combined(std::size_t max_n, Exec exec) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto pairs = unordered_pairs(n);
    const auto total = static_cast<std::int64_t>(std::uint64_t{1} << pairs.size());
    const auto subsets = leader_subsets(n, n);
    std::int64_t best_mask = total;
    std::optional<StrictCombinedWitness> best;

    auto scan = [&](std::uint64_t mask) -> std::optional<StrictCombinedWitness> {
      if (!mask_connected(n, pairs, mask)) return std::nullopt;
      Graph g = graph_from_mask(n, false, pairs, mask);
      for (const auto& subset : subsets) {
        LeaderSet leaders(g, subset);
        DerivedSet dset = derived_set(g, leaders);
        // dset == leaders makes the combined bound identical to delta.
        if (dset.size() == subset.size()) continue;
        std::size_t d = delta(g, leaders, PmiMode::exact, n).length;
        std::size_t c = delta(g, LeaderSet(g, dset.members), PmiMode::exact, n).length;
        if (c > std::max(d, dset.size())) return StrictCombinedWitness{g, subset, d, dset.size(), c};
      }
      return std::nullopt;
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 64)
      for (std::int64_t mask = 0; mask < total; ++mask) {
        std::int64_t current;
#pragma omp atomic read
        current = best_mask;
        if (mask > current) continue;
        auto w = scan(static_cast<std::uint64_t>(mask));
        if (w) {
#pragma omp critical(sscs_strict_witness)
          {
            if (mask < best_mask) {
#pragma omp atomic write
              best_mask = mask;
              best = std::move(w);
            }
          }
        }
      }
    } else {
      for (std::int64_t mask = 0; mask < total && !best; ++mask) best = scan(static_cast<std::uint64_t>(mask));
    }
    if (best) return best;
  }
  return std::nullopt;
}

std::string SuiteResult::summary() const {
  std::ostringstream out;
  out << "suite " << name << ": " << instances << " instances, " << violations.size() << " violations, "
      << strict_combined << " with combined > max(delta, zeta)\n";
  for (std::size_t f = 0; f < kFlagCount; ++f) {
    const Tally& t = tallies[f];
    out << "  " << flag_names()[f] << ": applicable=" << (t.verified + t.violated + t.inconclusive)
        << " verified=" << t.verified << " violated=" << t.violated << " inconclusive=" << t.inconclusive << '\n';
  }
  return out.str();
}

std::string SuiteResult::rows_csv() const {
  std::string out = "instance," + report_csv_header() + "\n";
  for (std::size_t k = 0; k < rows.size(); ++k) out += std::to_string(k) + "," + rows[k] + "\n";
  return out;
}

std::string dump_counterexample(const Counterexample& c) {
  std::ostringstream out;
  write_graph(out, c.graph);
  out << "# leaders ";
  for (std::size_t k = 0; k < c.leaders.size(); ++k) out << (k ? "," : "") << c.leaders[k];
  out << "\n# " << c.report_csv << '\n';
  return out.str();
}

}  // namespace sscs
