// Command-line front end: bounds, zero forcing, distance bound, sampled
// rank, ensemble sweeps, theorem suites and graph generation.
//
// Exit codes: 0 ok, 1 bad input, 2 bound-ordering violation (bounds),
// 3 theorem violation (verify).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sscs/bounds.hpp"
#include "sscs/ensemble.hpp"
#include "sscs/graph.hpp"
#include "sscs/parallel.hpp"
#include "sscs/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitOrdering = 2;
constexpr int kExitTheorem = 3;

std::vector<sscs::NodeId> read_leaders(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw sscs::StructuralError("cannot open leader file '" + arg.substr(1) + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    for (char& c : text) {
      if (c == '\n' || c == '\r' || c == ' ' || c == '\t') c = ',';
    }
    std::string cleaned;
    for (char c : text) {
      if (c == ',' && (cleaned.empty() || cleaned.back() == ',')) continue;
      cleaned += c;
    }
    if (!cleaned.empty() && cleaned.back() == ',') cleaned.pop_back();
    return sscs::parse_leader_list(cleaned);
  }
  return sscs::parse_leader_list(arg);
}

struct GraphArgs {
  std::string graph_file;
  std::string leaders;
};

void add_graph_args(CLI::App* cmd, GraphArgs& args) {
  cmd->add_option("graph", args.graph_file, "Graph file (text or JSON)")->required();
  cmd->add_option("-l,--leaders", args.leaders, "Comma-separated leader ids, or @file")->required();
}

sscs::WeightSpec weight_spec(const std::string& scheme, std::uint32_t max_weight) {
  sscs::WeightSpec spec;
  spec.scheme = sscs::parse_weight_scheme(scheme);
  spec.max_weight = max_weight;
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  sscs::configure_threads_from_env();

  CLI::App app{"Lower bounds on the strong structurally controllable subspace of diffusive networks"};
  app.require_subcommand(1);

  // bounds
  GraphArgs bounds_args;
  std::string bounds_mode = "auto";
  std::size_t bounds_cap = sscs::kDefaultExactCap;
  std::size_t bounds_rank = 0;
  std::string bounds_scheme = "integer";
  std::uint32_t bounds_max_weight = 100;
  std::uint64_t bounds_seed = 1;
  bool bounds_csv = false;
  auto* bounds_cmd = app.add_subcommand("bounds", "delta, zeta and the combined bound for one leader set");
  add_graph_args(bounds_cmd, bounds_args);
  bounds_cmd->add_option("--mode", bounds_mode, "exact | greedy | auto");
  bounds_cmd->add_option("--cap", bounds_cap, "Largest leader count solved exactly in auto mode");
  bounds_cmd->add_option("--rank", bounds_rank, "Attach K sampled controllability ranks");
  bounds_cmd->add_option("--scheme", bounds_scheme, "Weight scheme: unit | integer | uniform");
  bounds_cmd->add_option("--max-weight", bounds_max_weight, "W for the integer scheme");
  bounds_cmd->add_option("--seed", bounds_seed, "Master seed for weight samples");
  bounds_cmd->add_flag("--csv", bounds_csv, "One-line CSV instead of JSON");

  // zf
  GraphArgs zf_args;
  bool zf_trace = false;
  auto* zf_cmd = app.add_subcommand("zf", "Derived set and zeta under zero forcing");
  add_graph_args(zf_cmd, zf_args);
  zf_cmd->add_flag("--trace", zf_trace, "Include the (forcer, forced) events");

  // delta
  GraphArgs delta_args;
  std::string delta_mode = "auto";
  std::size_t delta_cap = sscs::kDefaultExactCap;
  bool delta_dl_csv = false;
  auto* delta_cmd = app.add_subcommand("delta", "Longest PMI sequence of distance-to-leader vectors");
  add_graph_args(delta_cmd, delta_args);
  delta_cmd->add_option("--mode", delta_mode, "exact | greedy | auto");
  delta_cmd->add_option("--cap", delta_cap, "Largest leader count solved exactly in auto mode");
  delta_cmd->add_flag("--dl-csv", delta_dl_csv, "Print the distance-to-leaders matrix as CSV instead");

  // gamma
  GraphArgs gamma_args;
  std::size_t gamma_samples = 5;
  std::string gamma_scheme = "integer";
  std::uint32_t gamma_max_weight = 100;
  std::uint64_t gamma_seed = 1;
  bool gamma_csv = false;
  auto* gamma_cmd = app.add_subcommand("gamma", "Sampled upper estimate of the minimum controllability rank");
  add_graph_args(gamma_cmd, gamma_args);
  gamma_cmd->add_option("-k,--samples", gamma_samples, "Number of weight samples")->check(CLI::PositiveNumber);
  gamma_cmd->add_option("--scheme", gamma_scheme, "Weight scheme: unit | integer | uniform");
  gamma_cmd->add_option("--max-weight", gamma_max_weight, "W for the integer scheme");
  gamma_cmd->add_option("--seed", gamma_seed, "Master seed");
  gamma_cmd->add_flag("--csv", gamma_csv, "Per-sample evidence CSV");

  // ensemble
  std::string ensemble_config;
  std::string ensemble_out = ".";
  std::string ensemble_prefix = "ensemble";
  bool ensemble_serial = false;
  auto* ensemble_cmd = app.add_subcommand("ensemble", "Random-graph sweep of the bounds against leader count");
  ensemble_cmd->add_option("config", ensemble_config, "JSON config")->required();
  ensemble_cmd->add_option("-o,--out-dir", ensemble_out, "Directory for the CSV files");
  ensemble_cmd->add_option("--prefix", ensemble_prefix, "File name prefix");
  ensemble_cmd->add_flag("--serial", ensemble_serial, "Use the serial reference path");

  // verify
  std::string verify_suite = "exhaustive";
  sscs::SuiteOptions verify_opts;
  std::size_t verify_find_strict = 0;
  std::string verify_log;
  auto* verify_cmd = app.add_subcommand("verify", "Machine-check the bound relations over an instance suite");
  verify_cmd->add_option("--suite", verify_suite, "exhaustive | random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  verify_cmd->add_option("--max-n", verify_opts.max_n, "Largest graph (exhaustive: undirected; random: any)");
  verify_cmd->add_option("--directed-max-n", verify_opts.directed_max_n, "Largest single-leader digraph");
  verify_cmd->add_option("--max-leaders", verify_opts.max_leaders, "Largest leader set (exhaustive)");
  verify_cmd->add_option("--instances", verify_opts.instances, "Random suite size");
  verify_cmd->add_option("--max-m", verify_opts.random_max_m, "Largest leader set (random)");
  verify_cmd->add_option("--samples", verify_opts.rank_samples, "Weight samples per instance");
  verify_cmd->add_option("--seed", verify_opts.seed, "Master seed");
  verify_cmd->add_option("--find-strict", verify_find_strict,
                         "Also search connected graphs up to this size for combined > max(delta, zeta)");
  verify_cmd->add_option("--log", verify_log, "Write one CSV row per instance to this file");

  // generate
  std::string gen_family = "er";
  std::size_t gen_n = 10;
  double gen_p = 0.1;
  std::size_t gen_eps = 2;
  std::uint64_t gen_seed = 1;
  bool gen_json = false;
  auto* generate_cmd = app.add_subcommand("generate", "Write a graph in the text file format");
  generate_cmd->add_option("--family", gen_family, "er | ba | path | cycle | star");
  generate_cmd->add_option("-n,--nodes", gen_n, "Node count")->check(CLI::PositiveNumber);
  generate_cmd->add_option("-p,--prob", gen_p, "ER edge probability");
  generate_cmd->add_option("--eps", gen_eps, "BA attachment count");
  generate_cmd->add_option("--seed", gen_seed, "Seed for random families");
  generate_cmd->add_flag("--json", gen_json, "JSON instead of the text format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*bounds_cmd) {
      sscs::Graph g = sscs::read_graph_file(bounds_args.graph_file);
      sscs::LeaderSet leaders(g, read_leaders(bounds_args.leaders));
      sscs::BoundsOptions opts;
      opts.mode = sscs::parse_pmi_mode(bounds_mode);
      opts.exact_cap = bounds_cap;
      if (bounds_rank > 0) {
        opts.with_rank = true;
        opts.gamma.samples = bounds_rank;
        opts.gamma.spec = weight_spec(bounds_scheme, bounds_max_weight);
        opts.gamma.seed = bounds_seed;
        opts.gamma.exec = sscs::Exec::parallel;
        std::cerr << "seed: " << bounds_seed << '\n';
      }
      sscs::BoundsReport report = sscs::bounds_report(g, leaders, opts);
      if (bounds_csv) {
        std::cout << sscs::report_csv_header() << '\n' << sscs::report_csv_row(report) << '\n';
      } else {
        std::cout << sscs::report_json(report) << '\n';
      }
      if (report.flags.any_violation()) {
        std::cerr << "bound ordering violated: " << report.flags.compact() << '\n';
        sscs::write_graph(std::cerr, g);
        return kExitOrdering;
      }
      return kExitOk;
    }

    if (*zf_cmd) {
      sscs::Graph g = sscs::read_graph_file(zf_args.graph_file);
      sscs::LeaderSet leaders(g, read_leaders(zf_args.leaders));
      sscs::DerivedSet dset = sscs::derived_set(g, leaders);
      nlohmann::json out = {{"zeta", dset.size()},
                            {"derived_set", dset.members},
                            {"is_zfs", dset.size() == g.node_count()}};
      if (zf_trace) out["trace"] = nlohmann::json::parse(sscs::force_trace_json(dset));
      std::cout << out.dump(2) << '\n';
      return kExitOk;
    }

    if (*delta_cmd) {
      sscs::Graph g = sscs::read_graph_file(delta_args.graph_file);
      sscs::LeaderSet leaders(g, read_leaders(delta_args.leaders));
      sscs::DLMatrix dl = sscs::dl_matrix(g, leaders);
      if (delta_dl_csv) {
        std::cout << sscs::dl_matrix_csv(dl);
        return kExitOk;
      }
      sscs::DeltaResult res = sscs::delta_from_dl(dl, sscs::parse_pmi_mode(delta_mode), delta_cap);
      nlohmann::json out = {{"length", res.length},
                            {"exact", res.exact},
                            {"sequence", nlohmann::json::parse(sscs::pmi_sequence_json(dl, res.sequence))}};
      std::cout << out.dump(2) << '\n';
      return kExitOk;
    }

    if (*gamma_cmd) {
      sscs::Graph g = sscs::read_graph_file(gamma_args.graph_file);
      sscs::LeaderSet leaders(g, read_leaders(gamma_args.leaders));
      sscs::GammaOptions opts;
      opts.samples = gamma_samples;
      opts.spec = weight_spec(gamma_scheme, gamma_max_weight);
      opts.seed = gamma_seed;
      opts.exec = sscs::Exec::parallel;
      std::cerr << "seed: " << gamma_seed << '\n';
      sscs::GammaEstimate est = sscs::gamma_upper_estimate(g, leaders, opts);
      if (gamma_csv) {
        std::cout << sscs::sample_evidence_csv(est);
      } else {
        nlohmann::json ranks = nlohmann::json::array();
        for (const auto& s : est.samples) ranks.push_back(s.rank);
        std::cout << nlohmann::json{{"gamma_upper", est.gamma_upper}, {"ranks", ranks}}.dump(2) << '\n';
      }
      return kExitOk;
    }

    if (*ensemble_cmd) {
      std::ifstream in(ensemble_config);
      if (!in) throw sscs::ConfigError("cannot open config '" + ensemble_config + "'");
      std::stringstream buf;
      buf << in.rdbuf();
      sscs::EnsembleConfig cfg = sscs::parse_ensemble_config(buf.str());
      std::cerr << "seed: " << cfg.seed << '\n';
      sscs::SweepResult result = sscs::run_ensemble(cfg, ensemble_serial ? sscs::Exec::serial : sscs::Exec::parallel);
      for (const auto& row : result.rows) {
        if (!row.error.empty()) {
          std::cerr << "instance " << row.instance_seed << " (m=" << row.m << ") failed: " << row.error << '\n';
        }
      }
      std::filesystem::create_directories(ensemble_out);
      auto instances_path = std::filesystem::path(ensemble_out) / (ensemble_prefix + "_instances.csv");
      auto summary_path = std::filesystem::path(ensemble_out) / (ensemble_prefix + "_summary.csv");
      std::ofstream(instances_path) << sscs::instances_csv(result);
      std::ofstream(summary_path) << sscs::summary_csv(result);
      std::cout << instances_path.string() << '\n' << summary_path.string() << '\n';
      return kExitOk;
    }

    if (*verify_cmd) {
      verify_opts.exec = sscs::Exec::parallel;
      std::cerr << "seed: " << verify_opts.seed << '\n';
      sscs::SuiteResult result;
      if (verify_suite == "exhaustive") {
        if (verify_opts.max_n > 8) throw sscs::ConfigError("exhaustive suite supports --max-n up to 8");
        result = sscs::run_exhaustive_suite(verify_opts);
      } else {
        verify_opts.random_max_n = verify_opts.max_n;
        result = sscs::run_random_suite(verify_opts);
      }
      std::cout << result.summary();
      if (!verify_log.empty()) std::ofstream(verify_log) << result.rows_csv();
      if (verify_find_strict > 0) {
        auto witness = sscs::find_strict_combined(verify_find_strict);
        if (witness) {
          std::cout << "strict combined instance: delta=" << witness->delta << " zeta=" << witness->zeta
                    << " combined=" << witness->combined << '\n';
          sscs::write_graph(std::cout, witness->graph);
          std::cout << "# leaders ";
          for (std::size_t k = 0; k < witness->leaders.size(); ++k) {
            std::cout << (k ? "," : "") << witness->leaders[k];
          }
          std::cout << '\n';
        } else {
          std::cout << "no strict combined instance up to n=" << verify_find_strict << '\n';
        }
      }
      if (!result.ok()) {
        for (const auto& c : result.violations) std::cerr << sscs::dump_counterexample(c);
        return kExitTheorem;
      }
      return kExitOk;
    }

    if (*generate_cmd) {
      sscs::Family family = sscs::parse_family(gen_family);
      sscs::Graph g = [&] {
        switch (family) {
          case sscs::Family::er:
            std::cerr << "seed: " << gen_seed << '\n';
            return sscs::gen_er(gen_n, gen_p, gen_seed);
          case sscs::Family::ba:
            std::cerr << "seed: " << gen_seed << '\n';
            return sscs::gen_ba(gen_n, gen_eps, gen_seed);
          default:
            return sscs::gen_named(family, gen_n);
        }
      }();
      if (gen_json) {
        std::cout << sscs::graph_to_json(g) << '\n';
      } else {
        sscs::write_graph(std::cout, g);
      }
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
