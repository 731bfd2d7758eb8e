// gnne: command-line front end. Exit codes: 0 ok, 1 usage, 2 data, 3 numeric.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gnne/error.hpp"
#include "gnne/experiment.hpp"
#include "gnne/methods.hpp"

namespace fs = std::filesystem;
using namespace gnne;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kNumeric = 3 };

struct Options {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string output_dir;
  std::string run_dir;

  std::size_t nodes = 1000;
  std::size_t m = 2;
  std::string out;

  bool no_baselines = false;
  std::optional<std::size_t> epochs_feature, epochs_task, label_runs, ba_nodes, ba_m;
  std::optional<double> learning_rate, weight_decay;

  std::string dataset;
  std::string method;
  std::string checkpoint;
  std::vector<std::string> rankings;
  std::string metric = "both";
  std::optional<double> step;
  std::optional<std::string> efficiency_base;
  std::optional<double> top_frac, beta;
  std::optional<std::size_t> runs;

  std::vector<std::string> datasets;
  std::vector<std::string> methods;
};

ExperimentConfig resolve_config(const Options& o) {
  ExperimentConfig cfg = o.config.empty() ? ExperimentConfig{} : load_config_file(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (o.epochs_feature) cfg.train.epochs_feature = *o.epochs_feature;
  if (o.epochs_task) cfg.train.epochs_task = *o.epochs_task;
  if (o.label_runs) cfg.train.label_runs = *o.label_runs;
  if (o.ba_nodes) cfg.ba_nodes = *o.ba_nodes;
  if (o.ba_m) cfg.ba_m = *o.ba_m;
  if (o.learning_rate) cfg.train.learning_rate = *o.learning_rate;
  if (o.weight_decay) cfg.train.weight_decay = *o.weight_decay;
  if (o.step) cfg.evaluation.figure_step = *o.step;
  if (o.efficiency_base) {
    cfg.evaluation.efficiency_base =
        *o.efficiency_base == "original" ? EfficiencyBase::original : EfficiencyBase::survivors;
  }
  if (o.top_frac) cfg.evaluation.top_fraction = *o.top_frac;
  if (o.beta) cfg.evaluation.beta = *o.beta;
  if (o.runs) cfg.evaluation.spreading_runs = *o.runs;
  if (!o.datasets.empty()) {
    cfg.datasets.clear();
    for (const auto& d : o.datasets) {
      const auto eq = d.find('=');
      if (eq == std::string::npos) {
        cfg.datasets.push_back({fs::path(d).stem().string(), d});
      } else {
        cfg.datasets.push_back({d.substr(0, eq), d.substr(eq + 1)});
      }
    }
  }
  if (!o.methods.empty()) cfg.methods = o.methods;
  cfg.apply_seed();
  cfg.validate();
  return cfg;
}

fs::path run_directory(const Options& o, const ExperimentConfig& cfg, const std::string& command) {
  if (!o.run_dir.empty()) {
    fs::create_directories(o.run_dir);
    return o.run_dir;
  }
  return make_run_dir(output_root(o.output_dir, cfg), command);
}

std::vector<fs::path> to_paths(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

AttackMetric parse_metric(const std::string& s) {
  if (s == "lcc") return AttackMetric::lcc;
  if (s == "efficiency") return AttackMetric::efficiency;
  return AttackMetric::both;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vital node identification: centralities, GNNE training, attack and spreading evaluation"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config, "JSON experiment config (flags override its keys)")->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "Global seed");
  app.add_option("--output-dir", o.output_dir, "Root for timestamped run directories (default $GNNE_OUTPUT_DIR or ./runs)");
  app.add_option("--run-dir", o.run_dir, "Write into exactly this directory instead of a timestamped one");

  auto* gen = app.add_subcommand("generate", "Write a Barabasi-Albert edge list");
  gen->add_option("-n,--nodes", o.nodes, "Number of nodes")->capture_default_str();
  gen->add_option("-m,--edges-per-node", o.m, "Edges added per new node")->capture_default_str();
  gen->add_option("-o,--out", o.out, "Output edge list (default: <run dir>/ba.txt)");

  auto* train = app.add_subcommand("train", "Train GNNE (and the GAT/GCN baselines) on a BA network");
  train->add_flag("--no-baselines", o.no_baselines, "Skip the GAT/GCN baselines");
  train->add_option("--ba-nodes", o.ba_nodes);
  train->add_option("--ba-m", o.ba_m);
  train->add_option("--epochs-feature", o.epochs_feature);
  train->add_option("--epochs-task", o.epochs_task);
  train->add_option("--label-runs", o.label_runs, "SIR runs per node for labels");
  train->add_option("--lr", o.learning_rate);
  train->add_option("--wd", o.weight_decay);

  auto* rank = app.add_subcommand("rank", "Rank the nodes of a dataset with one method");
  rank->add_option("-d,--dataset", o.dataset, "Edge list")->required()->check(CLI::ExistingFile);
  rank->add_option("-M,--method", o.method, "One of " + method_list())->required();
  rank->add_option("--checkpoint", o.checkpoint, "Checkpoint from `train` (GNNE, GAT, GCN)")->check(CLI::ExistingFile);
  rank->add_option("-o,--out", o.out, "Output CSV (default: <run dir>/ranking_<method>.csv)");

  auto* attack = app.add_subcommand("attack", "Static targeted attack curves and removal-ratio table");
  attack->add_option("-d,--dataset", o.dataset, "Edge list")->required()->check(CLI::ExistingFile);
  attack->add_option("-r,--ranking", o.rankings, "Ranking CSVs from `rank`")->required()->check(CLI::ExistingFile);
  attack->add_option("--metric", o.metric, "lcc, efficiency or both")
      ->check(CLI::IsMember({"lcc", "efficiency", "both"}))
      ->capture_default_str();
  attack->add_option("--step", o.step, "Figure grid step");
  attack->add_option("--efficiency-base", o.efficiency_base, "survivors or original")
      ->check(CLI::IsMember({"survivors", "original"}));

  auto* spread = app.add_subcommand("spread", "SIR spreading curves F(t) from the top-ranked nodes");
  spread->add_option("-d,--dataset", o.dataset, "Edge list")->required()->check(CLI::ExistingFile);
  spread->add_option("-r,--ranking", o.rankings, "Ranking CSVs from `rank`")->required()->check(CLI::ExistingFile);
  spread->add_option("--top-frac", o.top_frac, "Initially infected fraction");
  spread->add_option("--runs", o.runs, "Monte Carlo runs");
  spread->add_option("--beta", o.beta, "Infection probability (default: epidemic threshold)");

  auto* repro = app.add_subcommand("reproduce", "Train, rank every method on every dataset, write tables and curves");
  repro->add_option("--dataset", o.datasets, "name=path (repeatable; replaces the config list)");
  repro->add_option("--methods", o.methods, "Subset of " + method_list())->delimiter(',');
  repro->add_option("--label-runs", o.label_runs, "SIR runs per node for labels");
  repro->add_option("--epochs-feature", o.epochs_feature);
  repro->add_option("--epochs-task", o.epochs_task);
  repro->add_option("--runs", o.runs, "SIR runs for spreading curves");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!o.method.empty() && !is_method(o.method)) {
      throw ArgumentError("unknown method '" + o.method + "'; valid methods: " + method_list());
    }
    const ExperimentConfig cfg = resolve_config(o);
    if (gen->parsed()) {
      const fs::path out = o.out.empty() ? run_directory(o, cfg, "generate") / "ba.txt" : fs::path(o.out);
      cmd_generate(o.nodes, o.m, cfg.seed, out);
      std::cout << out.string() << '\n';
    } else if (train->parsed()) {
      const fs::path dir = run_directory(o, cfg, "train");
      cmd_train(cfg, dir, !o.no_baselines);
      std::cout << dir.string() << '\n';
    } else if (rank->parsed()) {
      const fs::path out =
          o.out.empty() ? run_directory(o, cfg, "rank") / ("ranking_" + o.method + ".csv") : fs::path(o.out);
      std::optional<fs::path> ckpt;
      if (!o.checkpoint.empty()) ckpt = o.checkpoint;
      cmd_rank(cfg, o.dataset, o.method, ckpt, out);
      std::cout << out.string() << '\n';
    } else if (attack->parsed()) {
      const fs::path dir = run_directory(o, cfg, "attack");
      cmd_attack(cfg, o.dataset, to_paths(o.rankings), parse_metric(o.metric), dir);
      std::cout << dir.string() << '\n';
    } else if (spread->parsed()) {
      const fs::path dir = run_directory(o, cfg, "spread");
      cmd_spread(cfg, o.dataset, to_paths(o.rankings), dir);
      std::cout << dir.string() << '\n';
    } else if (repro->parsed()) {
      const fs::path dir = run_directory(o, cfg, "reproduce");
      cmd_reproduce(cfg, dir);
      std::cout << dir.string() << '\n';
    }
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  }
  return kOk;
}
