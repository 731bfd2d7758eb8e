#include "gnne/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <unistd.h>

#include "json.hpp"

#include "gnne/error.hpp"
#include "gnne/methods.hpp"
#include "gnne/sir.hpp"

namespace gnne {

namespace fs = std::filesystem;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

enum SeedTag : std::uint64_t { kTrainSeed = 1, kEvalSeed = 2, kBaSeed = 3, kMethodSeed = 4 };

// Walks one JSON object, remembering which keys were consumed so leftovers
// can be reported.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string where) : j_(j), where_(std::move(where)) {
    if (!j_.is_object()) fail(where_.empty() ? "config" : where_, "expected an object");
  }

  template <class T>
  void read(const char* key, T& out) {
    const json* v = take(key);
    if (!v) return;
    const std::string name = qualified(key);
    if constexpr (std::is_same_v<T, std::string>) {
      if (!v->is_string()) fail(name, "expected a string");
      out = v->get<std::string>();
    } else if constexpr (std::is_same_v<T, double>) {
      if (!v->is_number()) fail(name, "expected a number");
      out = v->get<double>();
    } else if constexpr (std::is_integral_v<T>) {
      if (!v->is_number_unsigned()) fail(name, "expected a non-negative integer");
      out = v->get<T>();
    }
  }

  void read_optional(const char* key, std::optional<double>& out) {
    const json* v = take(key);
    if (!v) return;
    if (v->is_null()) {
      out.reset();
    } else if (v->is_number()) {
      out = v->get<double>();
    } else {
      fail(qualified(key), "expected a number or null");
    }
  }

  const json* take(const char* key) {
    seen_.insert(key);
    auto it = j_.find(key);
    return it == j_.end() ? nullptr : &*it;
  }

  std::string qualified(const char* key) const { return where_.empty() ? key : where_ + "." + key; }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) fail(qualified(it.key().c_str()), "unknown key");
    }
  }

  [[noreturn]] static void fail(const std::string& key, const std::string& what) {
    throw DataError("config: " + key + ": " + what);
  }

 private:
  const json& j_;
  std::string where_;
  std::set<std::string> seen_;
};

std::string format_table_value(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  return buf;
}

std::string format_full(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void log_line(const std::string& msg) { std::clog << "[gnne] " << msg << std::endl; }

std::string ranking_method_name(const fs::path& file) {
  std::string stem = file.stem().string();
  const std::string prefix = "ranking_";
  if (stem.rfind(prefix, 0) == 0) stem = stem.substr(prefix.size());
  return stem;
}

LoadedGraph load_dataset(const std::string& path) {
  auto loaded = load_edge_list_file(path);
  if (loaded.graph.num_nodes() < 2) throw DataError(path + ": need at least two nodes");
  return loaded;
}

std::vector<NamedRanking> read_rankings(const std::vector<fs::path>& files, const NodeMap& nodes) {
  if (files.empty()) throw ArgumentError("no ranking files given");
  std::vector<NamedRanking> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw DataError("cannot open ranking file " + f.string());
    try {
      out.push_back({ranking_method_name(f), read_ranked_csv(in, nodes)});
    } catch (const ParseError& e) {
      throw DataError(f.string() + ": " + e.what());
    }
  }
  return out;
}

void write_curve(const fs::path& path, const AttackCurve& curve) {
  write_file_atomic(path, [&](std::ostream& o) { write_curve_csv(o, curve); });
}

void write_spreading(const fs::path& path, const std::vector<double>& curve) {
  write_file_atomic(path, [&](std::ostream& o) { write_spreading_csv(o, curve); });
}

void write_config_copy(const ExperimentConfig& cfg, const fs::path& dir) {
  write_file_atomic(dir / "config.json", [&](std::ostream& o) { o << config_to_json(cfg) << '\n'; });
}

void write_loss(const fs::path& path, const std::vector<double>& loss) {
  write_file_atomic(path, [&](std::ostream& o) {
    o << "epoch,loss\n";
    for (std::size_t e = 0; e < loss.size(); ++e) o << e << ',' << format_full(loss[e]) << '\n';
  });
}

MethodContext method_context(const ExperimentConfig& cfg) {
  MethodContext ctx;
  ctx.gehc_walk = cfg.deepwalk;
  ctx.ci_radius = cfg.ci_radius;
  ctx.seed = derive_seed(cfg.seed, {kMethodSeed});
  return ctx;
}

constexpr const char* kPlotScript = R"(#!/usr/bin/env python3
# Plots every curve CSV (r,value or t,F_mean) found under the given run directory.
import csv, pathlib, sys
import matplotlib.pyplot as plt

root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
for dataset in sorted(p for p in root.iterdir() if p.is_dir()):
    for kind in ("lcc", "efficiency", "spread"):
        files = sorted(dataset.glob(kind + "_*.csv"))
        if not files:
            continue
        plt.figure()
        for f in files:
            rows = list(csv.reader(f.open()))[1:]
            plt.plot([float(r[0]) for r in rows], [float(r[1]) for r in rows], label=f.stem.split("_", 1)[1])
        plt.title(dataset.name + " " + kind)
        plt.legend(fontsize="small")
        plt.savefig(dataset / (kind + ".png"), dpi=120)
        plt.close()
)";

}  // namespace

// --- config -------------------------------------------------------------------

void ExperimentConfig::validate() const {
  for (const auto& m : methods) {
    if (!is_method(m)) throw ArgumentError("unknown method '" + m + "'; valid methods: " + method_list());
  }
  for (const auto& d : datasets) {
    if (d.name.empty()) throw ArgumentError("dataset entry without a name");
    if (!fs::exists(d.path)) throw DataError("dataset " + d.name + ": file not found: " + d.path);
  }
  if (ba_m < 1 || ba_nodes <= ba_m) throw ArgumentError("training.ba_nodes must exceed training.ba_m >= 1");
  train.validate();
  if (deepwalk.walk_length < 2 || deepwalk.walks_per_node < 1 || deepwalk.skip_gram.dimensions < 2) {
    throw ArgumentError("deepwalk: walk_length >= 2, walks_per_node >= 1 and dimensions >= 2 required");
  }
  if (ci_radius < 1) throw ArgumentError("centrality.ci_radius must be >= 1");
  const auto& e = evaluation;
  if (!(e.figure_step > 0.0 && e.figure_step <= 0.5)) throw ArgumentError("evaluation.figure_step must lie in (0, 0.5]");
  if (!(e.top_fraction > 0.0 && e.top_fraction <= 1.0)) throw ArgumentError("evaluation.top_fraction must lie in (0, 1]");
  if (e.spreading_runs < 1) throw ArgumentError("evaluation.spreading_runs must be >= 1");
  if (e.beta && !(*e.beta >= 0.0 && *e.beta <= 1.0)) throw ArgumentError("evaluation.beta must lie in [0, 1]");
}

void ExperimentConfig::apply_seed() {
  train.seed = derive_seed(seed, {kTrainSeed});
  evaluation.seed = derive_seed(seed, {kEvalSeed});
}

std::vector<std::string> ExperimentConfig::method_names() const {
  if (!methods.empty()) return methods;
  return {kMethodNames.begin(), kMethodNames.end()};
}

ExperimentConfig parse_config(std::istream& in, const fs::path& base_dir) {
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(std::string("config: invalid JSON: ") + e.what());
  }
  ExperimentConfig cfg;
  ObjectReader root(j, "");
  int version = -1;
  root.read("schema_version", version);
  if (version != ExperimentConfig::kSchemaVersion) {
    ObjectReader::fail("schema_version", "expected " + std::to_string(ExperimentConfig::kSchemaVersion));
  }
  root.read("seed", cfg.seed);
  root.read("output_dir", cfg.output_dir);
  if (const json* ds = root.take("datasets")) {
    if (!ds->is_array()) ObjectReader::fail("datasets", "expected an array");
    for (std::size_t i = 0; i < ds->size(); ++i) {
      ObjectReader r((*ds)[i], "datasets[" + std::to_string(i) + "]");
      DatasetSpec spec;
      r.read("name", spec.name);
      r.read("path", spec.path);
      r.finish();
      if (spec.path.empty()) ObjectReader::fail(r.qualified("path"), "missing");
      if (spec.name.empty()) spec.name = fs::path(spec.path).stem().string();
      fs::path p(spec.path);
      if (p.is_relative() && !base_dir.empty()) spec.path = (base_dir / p).lexically_normal().string();
      cfg.datasets.push_back(spec);
    }
  }
  if (const json* ms = root.take("methods")) {
    if (!ms->is_array()) ObjectReader::fail("methods", "expected an array of names");
    for (const auto& m : *ms) {
      if (!m.is_string()) ObjectReader::fail("methods", "expected an array of names");
      cfg.methods.push_back(m.get<std::string>());
    }
  }
  if (const json* t = root.take("training")) {
    ObjectReader r(*t, "training");
    r.read("ba_nodes", cfg.ba_nodes);
    r.read("ba_m", cfg.ba_m);
    r.read("learning_rate", cfg.train.learning_rate);
    r.read("weight_decay", cfg.train.weight_decay);
    r.read("epochs_feature", cfg.train.epochs_feature);
    r.read("epochs_task", cfg.train.epochs_task);
    r.read("layers", cfg.train.layers);
    r.read("gcn_hidden", cfg.train.gcn_hidden);
    r.read("feature_dim", cfg.train.feature_dim);
    r.read("gat_hidden", cfg.train.gat_hidden);
    r.read("gat_heads", cfg.train.gat_heads);
    r.read("gat_out", cfg.train.gat_out);
    r.read("label_runs", cfg.train.label_runs);
    r.finish();
  }
  if (const json* d = root.take("deepwalk")) {
    ObjectReader r(*d, "deepwalk");
    r.read("walks_per_node", cfg.deepwalk.walks_per_node);
    r.read("walk_length", cfg.deepwalk.walk_length);
    r.read("dimensions", cfg.deepwalk.skip_gram.dimensions);
    r.read("window", cfg.deepwalk.skip_gram.window);
    r.read("negatives", cfg.deepwalk.skip_gram.negatives);
    r.read("epochs", cfg.deepwalk.skip_gram.epochs);
    r.read("learning_rate", cfg.deepwalk.skip_gram.learning_rate);
    r.finish();
  }
  if (const json* c = root.take("centrality")) {
    ObjectReader r(*c, "centrality");
    r.read("ci_radius", cfg.ci_radius);
    r.finish();
  }
  if (const json* e = root.take("evaluation")) {
    ObjectReader r(*e, "evaluation");
    r.read("lcc_threshold", cfg.evaluation.lcc_threshold);
    r.read("efficiency_fraction", cfg.evaluation.efficiency_fraction);
    std::string base = cfg.evaluation.efficiency_base == EfficiencyBase::survivors ? "survivors" : "original";
    r.read("efficiency_base", base);
    if (base == "survivors") {
      cfg.evaluation.efficiency_base = EfficiencyBase::survivors;
    } else if (base == "original") {
      cfg.evaluation.efficiency_base = EfficiencyBase::original;
    } else {
      ObjectReader::fail("evaluation.efficiency_base", "expected \"survivors\" or \"original\"");
    }
    r.read("figure_step", cfg.evaluation.figure_step);
    r.read("top_fraction", cfg.evaluation.top_fraction);
    r.read_optional("beta", cfg.evaluation.beta);
    r.read("spreading_runs", cfg.evaluation.spreading_runs);
    r.finish();
  }
  root.finish();
  cfg.apply_seed();
  return cfg;
}

ExperimentConfig load_config_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open config " + path.string());
  return parse_config(in, path.parent_path());
}

std::string config_to_json(const ExperimentConfig& cfg) {
  ordered_json j;
  j["schema_version"] = ExperimentConfig::kSchemaVersion;
  j["seed"] = cfg.seed;
  j["output_dir"] = cfg.output_dir;
  j["datasets"] = ordered_json::array();
  for (const auto& d : cfg.datasets) j["datasets"].push_back({{"name", d.name}, {"path", d.path}});
  j["methods"] = cfg.method_names();
  const auto& t = cfg.train;
  j["training"] = {{"ba_nodes", cfg.ba_nodes},         {"ba_m", cfg.ba_m},
                   {"learning_rate", t.learning_rate}, {"weight_decay", t.weight_decay},
                   {"epochs_feature", t.epochs_feature}, {"epochs_task", t.epochs_task},
                   {"layers", t.layers},               {"gcn_hidden", t.gcn_hidden},
                   {"feature_dim", t.feature_dim},     {"gat_hidden", t.gat_hidden},
                   {"gat_heads", t.gat_heads},         {"gat_out", t.gat_out},
                   {"label_runs", t.label_runs}};
  const auto& w = cfg.deepwalk;
  j["deepwalk"] = {{"walks_per_node", w.walks_per_node},
                   {"walk_length", w.walk_length},
                   {"dimensions", w.skip_gram.dimensions},
                   {"window", w.skip_gram.window},
                   {"negatives", w.skip_gram.negatives},
                   {"epochs", w.skip_gram.epochs},
                   {"learning_rate", w.skip_gram.learning_rate}};
  j["centrality"] = {{"ci_radius", cfg.ci_radius}};
  const auto& e = cfg.evaluation;
  ordered_json ev = {{"lcc_threshold", e.lcc_threshold},
                     {"efficiency_fraction", e.efficiency_fraction},
                     {"efficiency_base", e.efficiency_base == EfficiencyBase::survivors ? "survivors" : "original"},
                     {"figure_step", e.figure_step},
                     {"top_fraction", e.top_fraction}};
  ev["beta"] = e.beta ? ordered_json(*e.beta) : ordered_json(nullptr);
  ev["spreading_runs"] = e.spreading_runs;
  j["evaluation"] = ev;
  return j.dump(2);
}

// --- output plumbing ----------------------------------------------------------

void write_file_atomic(const fs::path& path, const std::function<void(std::ostream&)>& write) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw DataError("cannot write " + tmp.string());
    write(out);
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw DataError("write failed: " + path.string());
    }
  }
  fs::rename(tmp, path);
}

fs::path output_root(const std::string& flag, const ExperimentConfig& cfg) {
  if (!flag.empty()) return flag;
  if (!cfg.output_dir.empty()) return cfg.output_dir;
  if (const char* env = std::getenv("GNNE_OUTPUT_DIR"); env && *env) return env;
  return "runs";
}

fs::path make_run_dir(const fs::path& root, const std::string& command) {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &tm);
  fs::create_directories(root);
  const std::string base = std::string(stamp) + "-" + command;
  for (int k = 1;; ++k) {
    fs::path dir = root / (k == 1 ? base : base + "-" + std::to_string(k));
    if (fs::create_directory(dir)) return dir;
  }
}

// --- commands -----------------------------------------------------------------

void cmd_generate(std::size_t n, std::size_t m, std::uint64_t seed, const fs::path& out) {
  const Graph g = generate_ba(n, m, seed);
  const NodeMap nodes = NodeMap::identity(n);
  write_file_atomic(out, [&](std::ostream& o) { save_edge_list(o, g, nodes); });
}

TrainOutputs cmd_train(const ExperimentConfig& cfg, const fs::path& dir, bool with_baselines) {
  write_config_copy(cfg, dir);
  const std::uint64_t ba_seed = derive_seed(cfg.seed, {kBaSeed});
  const Graph ba = generate_ba(cfg.ba_nodes, cfg.ba_m, ba_seed);
  const NodeMap ids = NodeMap::identity(ba.num_nodes());
  write_file_atomic(dir / "ba.txt", [&](std::ostream& o) { save_edge_list(o, ba, ids); });

  log_line("SIR labels: " + std::to_string(cfg.train.label_runs) + " runs per node on BA(" +
           std::to_string(cfg.ba_nodes) + ", " + std::to_string(cfg.ba_m) + ")");
  const auto labels = sir_labels(ba, cfg.train);
  write_file_atomic(dir / "sir_labels.csv", [&](std::ostream& o) {
    o << "node_label,spread\n";
    for (std::size_t v = 0; v < labels.size(); ++v) o << v << ',' << format_full(labels[v]) << '\n';
  });

  log_line("training GNNE");
  TrainOutputs out{train_gnne(ba, cfg.train, labels), std::nullopt};
  write_loss(dir / "loss_feature.csv", out.gnne.feature_loss);
  write_loss(dir / "loss_task.csv", out.gnne.task_loss);
  write_file_atomic(dir / "gnne_checkpoint.json", [&](std::ostream& o) { save_gnne_checkpoint(o, out.gnne); });

  if (with_baselines) {
    log_line("training GAT/GCN baselines");
    out.baselines = train_baselines(ba, cfg.train, cfg.deepwalk, labels);
    write_file_atomic(dir / "baseline_checkpoint.json",
                      [&](std::ostream& o) { save_baseline_checkpoint(o, *out.baselines); });
  }
  return out;
}

void cmd_rank(const ExperimentConfig& cfg, const std::string& dataset, const std::string& method,
              const std::optional<fs::path>& checkpoint, const fs::path& out) {
  if (!is_method(method)) throw ArgumentError("unknown method '" + method + "'; valid methods: " + method_list());
  const auto loaded = load_dataset(dataset);
  MethodContext ctx = method_context(cfg);
  std::optional<GnneModel> gnne;
  std::optional<BaselineModels> baselines;
  if (needs_model(method)) {
    if (!checkpoint) throw ArgumentError("method " + method + " needs --checkpoint (written by `gnne train`)");
    std::ifstream in(*checkpoint);
    if (!in) throw DataError("cannot open checkpoint " + checkpoint->string());
    if (method == "GNNE") {
      gnne = load_gnne_checkpoint(in);
      ctx.gnne = &*gnne;
    } else {
      baselines = load_baseline_checkpoint(in);
      ctx.baselines = &*baselines;
    }
  }
  const RankedList ranking = rank_method(method, loaded.graph, ctx);
  write_file_atomic(out, [&](std::ostream& o) { write_ranked_csv(o, ranking, loaded.nodes); });
}

void cmd_attack(const ExperimentConfig& cfg, const std::string& dataset, const std::vector<fs::path>& rankings,
                AttackMetric metric, const fs::path& dir) {
  const auto loaded = load_dataset(dataset);
  const auto named = read_rankings(rankings, loaded.nodes);
  write_config_copy(cfg, dir);
  const Graph& g = loaded.graph;
  const ComparisonConfig cc = cfg.evaluation;
  const double mu0 = efficiency(g, cc.efficiency_base);
  const double mu_threshold = cc.efficiency_fraction * mu0;

  std::ostringstream table;
  table << "method";
  if (metric != AttackMetric::efficiency) table << ",lcc_ratio,lcc_reached";
  if (metric != AttackMetric::lcc) table << ",efficiency_ratio,efficiency_reached";
  table << '\n';
  for (const auto& [method, ranking] : named) {
    table << method;
    if (metric != AttackMetric::efficiency) {
      auto fig = lcc_curve(g, ranking, cc.figure_step);
      write_curve(dir / ("lcc_" + method + ".csv"), fig);
      const auto r = removal_ratio_at(lcc_curve_per_node(g, ranking), cc.lcc_threshold);
      table << ',' << format_full(r.ratio) << ',' << (r.reached ? 1 : 0);
    }
    if (metric != AttackMetric::lcc) {
      auto fig = efficiency_curve(g, ranking, cc.figure_step, {cc.efficiency_base, std::nullopt});
      write_curve(dir / ("efficiency_" + method + ".csv"), fig);
      const auto curve = efficiency_curve_per_node(g, ranking, {cc.efficiency_base, mu_threshold});
      const auto r = removal_ratio_at(curve, mu_threshold);
      table << ',' << format_full(r.ratio) << ',' << (r.reached ? 1 : 0);
    }
    table << '\n';
  }
  write_file_atomic(dir / "attack_table.csv", [&](std::ostream& o) { o << table.str(); });
}

void cmd_spread(const ExperimentConfig& cfg, const std::string& dataset, const std::vector<fs::path>& rankings,
                const fs::path& dir) {
  const auto loaded = load_dataset(dataset);
  const auto named = read_rankings(rankings, loaded.nodes);
  write_config_copy(cfg, dir);
  const auto& e = cfg.evaluation;
  const double beta = e.beta ? *e.beta : epidemic_threshold(loaded.graph);
  std::ostringstream table;
  table << "method,F_steady\n";
  for (const auto& [method, ranking] : named) {
    const auto curve = spreading_ability(loaded.graph, ranking, e.top_fraction, beta, e.spreading_runs, e.seed);
    write_spreading(dir / ("spread_" + method + ".csv"), curve);
    table << method << ',' << format_full(curve.back()) << '\n';
  }
  write_file_atomic(dir / "spread_table.csv", [&](std::ostream& o) { o << table.str(); });
}

void cmd_reproduce(const ExperimentConfig& cfg, const fs::path& dir) {
  cfg.validate();
  if (cfg.datasets.empty()) throw ArgumentError("reproduce needs at least one dataset in the config");
  const auto methods = cfg.method_names();
  bool wants_gnne = false, wants_baselines = false;
  for (const auto& m : methods) {
    wants_gnne |= m == "GNNE";
    wants_baselines |= m == "GAT" || m == "GCN";
  }
  std::optional<TrainOutputs> trained;
  if (wants_gnne || wants_baselines) trained = cmd_train(cfg, dir, wants_baselines);
  else write_config_copy(cfg, dir);

  // table[metric][method][dataset]
  std::map<std::string, std::map<std::string, std::string>> lcc_table, eff_table, spread_table;
  for (const auto& ds : cfg.datasets) {
    log_line("dataset " + ds.name);
    const auto loaded = load_dataset(ds.path);
    const fs::path ddir = dir / ds.name;
    MethodContext ctx = method_context(cfg);
    if (trained) {
      ctx.gnne = &trained->gnne;
      if (trained->baselines) ctx.baselines = &*trained->baselines;
    }
    std::vector<NamedRanking> rankings;
    for (const auto& m : methods) {
      log_line("  ranking " + m);
      rankings.push_back({m, rank_method(m, loaded.graph, ctx)});
      write_file_atomic(ddir / ("ranking_" + m + ".csv"),
                        [&](std::ostream& o) { write_ranked_csv(o, rankings.back().ranking, loaded.nodes); });
    }
    log_line("  attacks and spreading");
    const auto result = compare_methods(loaded.graph, rankings, cfg.evaluation);
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
      const auto& m = result.rows[i].method;
      write_curve(ddir / ("lcc_" + m + ".csv"), result.lcc_curves[i]);
      write_curve(ddir / ("efficiency_" + m + ".csv"), result.efficiency_curves[i]);
      write_spreading(ddir / ("spread_" + m + ".csv"), result.spreading[i]);
      lcc_table[m][ds.name] = format_table_value(result.rows[i].lcc_ratio.ratio);
      eff_table[m][ds.name] = format_table_value(result.rows[i].efficiency_ratio.ratio);
      spread_table[m][ds.name] = format_table_value(result.rows[i].spreading_steady);
    }
    write_file_atomic(ddir / "report.csv", [&](std::ostream& o) { write_report_csv(o, result.rows); });
  }

  auto write_table = [&](const std::string& file, auto& table) {
    write_file_atomic(dir / file, [&](std::ostream& o) {
      o << "method";
      for (const auto& ds : cfg.datasets) o << ',' << ds.name;
      o << '\n';
      for (const auto& m : methods) {
        o << m;
        for (const auto& ds : cfg.datasets) o << ',' << table[m][ds.name];
        o << '\n';
      }
    });
  };
  write_table("table_lcc.csv", lcc_table);
  write_table("table_efficiency.csv", eff_table);
  write_table("table_spreading.csv", spread_table);
  write_file_atomic(dir / "plot_curves.py", [](std::ostream& o) { o << kPlotScript; });
}

}  // namespace gnne
