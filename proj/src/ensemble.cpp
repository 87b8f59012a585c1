#include "sscs/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sscs/bounds.hpp"

namespace sscs {

const char* to_string(Family f) {
  switch (f) {
    case Family::er: return "er";
    case Family::ba: return "ba";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "er" || text == "ER") return Family::er;
  if (text == "ba" || text == "BA") return Family::ba;
  if (text == "path") return Family::path;
  if (text == "cycle") return Family::cycle;
  if (text == "star") return Family::star;
  throw ConfigError("unknown graph family '" + text + "'");
}

Graph gen_er(std::size_t n, double p, std::uint64_t seed) {
  if (!(p > 0.0 && p < 1.0)) throw ConfigError("ER probability must lie in (0, 1)");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (coin(rng) < p) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edge_list(n, false, edges);
}

Graph gen_ba(std::size_t n, std::size_t eps, std::uint64_t seed) {
  if (eps < 1 || eps >= n) throw ConfigError("BA attachment count must satisfy 1 <= eps < n");
  const std::size_t core = std::min(std::max<std::size_t>(eps, 2), n);
  std::vector<Edge> edges;
  // Each node appears once per incident edge, so a uniform draw from this
  // list is a degree-proportional draw.
  std::vector<NodeId> stubs;
  for (NodeId i = 0; i < core; ++i) {
    for (NodeId j = i + 1; j < core; ++j) {
      edges.emplace_back(i, j);
      stubs.push_back(i);
      stubs.push_back(j);
    }
  }
  std::mt19937_64 rng(seed);
  std::vector<NodeId> targets;
  for (auto v = static_cast<NodeId>(core); v < n; ++v) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
    while (targets.size() < eps) {
      NodeId t = stubs[pick(rng)];
      if (std::find(targets.begin(), targets.end(), t) == targets.end()) targets.push_back(t);
    }
    for (NodeId t : targets) {
      edges.emplace_back(t, v);
      stubs.push_back(t);
      stubs.push_back(v);
    }
  }
  return Graph::from_edge_list(n, false, edges);
}

Graph gen_named(Family family, std::size_t n) {
  if (n < 1) throw ConfigError("graph needs at least one node");
  std::vector<Edge> edges;
  switch (family) {
    case Family::path:
    case Family::cycle:
      for (NodeId i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (family == Family::cycle && n >= 3) edges.emplace_back(static_cast<NodeId>(n - 1), 0);
      break;
    case Family::star:
      if (n < 2) throw ConfigError("star needs at least two nodes");
      for (NodeId i = 1; i < n; ++i) edges.emplace_back(0, i);
      break;
    default:
      throw ConfigError(std::string("family '") + to_string(family) + "' is random, not named");
  }
  return Graph::from_edge_list(n, false, edges);
}

std::vector<NodeId> random_leaders(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1 || m > n) throw ConfigError("leader count must lie in [1, n]");
  std::vector<NodeId> pool(n);
  std::iota(pool.begin(), pool.end(), NodeId{0});
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < m; ++k) {
    std::uniform_int_distribution<std::size_t> pick(k, n - 1);
    std::swap(pool[k], pool[pick(rng)]);
  }
  pool.resize(m);
  return pool;
}

void EnsembleConfig::validate() const {
  if (families.empty()) throw ConfigError("config lists no graph family");
  if (n < 1) throw ConfigError("n must be at least 1");
  if (leader_counts.empty()) throw ConfigError("leader_counts is empty");
  if (instances_per_point < 1) throw ConfigError("instances_per_point must be at least 1");
  for (std::size_t m : leader_counts) {
    if (m < 1 || m > n) throw ConfigError("leader count " + std::to_string(m) + " outside [1, n]");
  }
  for (const auto& f : families) {
    switch (f.family) {
      case Family::er:
        if (!(f.param > 0.0 && f.param < 1.0)) throw ConfigError("ER probability must lie in (0, 1)");
        break;
      case Family::ba:
        if (f.param < 1.0 || f.param >= static_cast<double>(n) || std::floor(f.param) != f.param) {
          throw ConfigError("BA eps must be an integer with 1 <= eps < n");
        }
        break;
      case Family::star:
        if (n < 2) throw ConfigError("star needs n >= 2");
        break;
      default:
        break;
    }
  }
  if (rank_checks && *rank_checks < 1) throw ConfigError("rank_checks must be at least 1 when given");
}

EnsembleConfig parse_ensemble_config(const std::string& json_text) {
  EnsembleConfig cfg;
  try {
    auto doc = nlohmann::json::parse(json_text);
    auto read_family = [](const nlohmann::json& j) {
      FamilySpec f;
      f.family = parse_family(j.at("family").get<std::string>());
      f.param = j.value("param", 0.0);
      return f;
    };
    if (doc.contains("families")) {
      for (const auto& f : doc.at("families")) cfg.families.push_back(read_family(f));
    } else {
      cfg.families.push_back(read_family(doc));
    }
    cfg.n = doc.at("n").get<std::size_t>();
    cfg.leader_counts = doc.at("leader_counts").get<std::vector<std::size_t>>();
    cfg.instances_per_point = doc.value("instances_per_point", cfg.instances_per_point);
    cfg.seed = doc.value("seed", cfg.seed);
    cfg.mode = parse_pmi_mode(doc.value("mode", std::string("auto")));
    cfg.exact_cap = doc.value("exact_cap", cfg.exact_cap);
    if (doc.contains("rank_checks") && !doc.at("rank_checks").is_null()) {
      cfg.rank_checks = doc.at("rank_checks").get<std::size_t>();
    }
    if (doc.contains("weights")) {
      cfg.weights.scheme = parse_weight_scheme(doc.at("weights").get<std::string>());
    }
    cfg.weights.max_weight = doc.value("max_weight", cfg.weights.max_weight);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad ensemble config: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  cfg.validate();
  return cfg;
}

namespace {

Graph draw_graph(const FamilySpec& f, std::size_t n, std::uint64_t seed) {
  switch (f.family) {
    case Family::er: return gen_er(n, f.param, seed);
    case Family::ba: return gen_ba(n, static_cast<std::size_t>(f.param), seed);
    default: return gen_named(f.family, n);
  }
}

struct Job {
  std::size_t point = 0;
  FamilySpec family;
  std::size_t m = 0;
  std::uint64_t seed = 0;
};

InstanceRow run_instance(const EnsembleConfig& cfg, const Job& job) {
  InstanceRow row;
  row.family = job.family;
  row.n = cfg.n;
  row.m = job.m;
  row.instance_seed = job.seed;
  try {
    Graph g = draw_graph(job.family, cfg.n, derive_seed(job.seed, 0));
    LeaderSet leaders(g, random_leaders(cfg.n, job.m, derive_seed(job.seed, 1)));
    BoundsOptions opts;
    opts.mode = cfg.mode;
    opts.exact_cap = cfg.exact_cap;
    if (cfg.rank_checks) {
      opts.with_rank = true;
      opts.check_range = false;
      opts.gamma.samples = *cfg.rank_checks;
      opts.gamma.spec = cfg.weights;
      opts.gamma.seed = derive_seed(job.seed, 2);
    }
    BoundsReport report = bounds_report(g, leaders, opts);
    row.delta = report.delta.length;
    row.delta_exact = report.delta.exact;
    row.zeta = report.zeta;
    row.combined = report.combined.delta.length;
    row.combined_exact = report.combined.delta.exact;
    row.gamma_upper = report.min_rank();
    row.ordering_ok = report.flags.combined_dominates != Verdict::violated &&
                      report.flags.below_sampled_rank != Verdict::violated;
  } catch (const std::exception& e) {
    row.error = e.what();
    if (row.error.empty()) row.error = "unknown failure";
  }
  return row;
}

}  // namespace

SweepResult run_ensemble(const EnsembleConfig& cfg, Exec exec) {
  cfg.validate();
  std::vector<Job> jobs;
  SweepResult result;
  for (std::size_t fi = 0; fi < cfg.families.size(); ++fi) {
    for (std::size_t m : cfg.leader_counts) {
      PointSummary point;
      point.family = cfg.families[fi];
      point.m = m;
      const std::size_t point_index = result.points.size();
      result.points.push_back(point);
      const std::uint64_t point_seed = derive_seed(derive_seed(cfg.seed, fi), m);
      for (std::size_t i = 0; i < cfg.instances_per_point; ++i) {
        jobs.push_back({point_index, cfg.families[fi], m, derive_seed(point_seed, i)});
      }
    }
  }

  result.rows.resize(jobs.size());
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(jobs.size()); ++k) {
      result.rows[k] = run_instance(cfg, jobs[k]);
    }
  } else {
    for (std::size_t k = 0; k < jobs.size(); ++k) result.rows[k] = run_instance(cfg, jobs[k]);
  }

  // Within each point, rows are written in order of their derived seed.
  std::vector<std::size_t> order(jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (jobs[a].point != jobs[b].point) return jobs[a].point < jobs[b].point;
    return jobs[a].seed < jobs[b].seed;
  });
  std::vector<InstanceRow> sorted;
  sorted.reserve(order.size());
  for (std::size_t k : order) sorted.push_back(std::move(result.rows[k]));
  result.rows = std::move(sorted);

  for (std::size_t k = 0; k < order.size(); ++k) {
    const InstanceRow& row = result.rows[k];
    PointSummary& point = result.points[jobs[order[k]].point];
    if (!row.error.empty()) {
      ++point.failures;
      continue;
    }
    point.mean_delta += static_cast<double>(row.delta);
    point.mean_zeta += static_cast<double>(row.zeta);
    point.mean_combined += static_cast<double>(row.combined);
    point.dset_always_leaders = point.dset_always_leaders && row.zeta == row.m;
    ++point.count;
  }
  for (auto& point : result.points) {
    if (point.count == 0) continue;
    auto count = static_cast<double>(point.count);
    point.mean_delta /= count;
    point.mean_zeta /= count;
    point.mean_combined /= count;
  }
  return result;
}

namespace {

std::string format_param(const FamilySpec& f) {
  if (f.family != Family::er && f.family != Family::ba) return "";
  std::ostringstream out;
  out << f.param;
  return out.str();
}

}  // namespace

std::string instances_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "family,param,n,m,instance_seed,delta,delta_exact,zeta,combined,combined_exact,gamma_upper\n";
  for (const auto& r : result.rows) {
    if (!r.error.empty()) continue;
    out << to_string(r.family.family) << ',' << format_param(r.family) << ',' << r.n << ',' << r.m << ','
        << r.instance_seed << ',' << r.delta << ',' << (r.delta_exact ? 1 : 0) << ',' << r.zeta << ','
        << r.combined << ',' << (r.combined_exact ? 1 : 0) << ',';
    if (r.gamma_upper) out << *r.gamma_upper;
    out << '\n';
  }
  return out.str();
}

std::string summary_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "family,param,m,mean_delta,mean_zeta,mean_combined,count\n";
  out << std::fixed << std::setprecision(4);
  for (const auto& p : result.points) {
    out << to_string(p.family.family) << ',' << format_param(p.family) << ',' << p.m << ',' << p.mean_delta
        << ',' << p.mean_zeta << ',' << p.mean_combined << ',' << p.count << '\n';
  }
  return out.str();
}

}  // namespace sscs
