#pragma once

// Configuration and command drivers behind the gnne tool. Every command
// writes into a caller-chosen run directory; files land via temp + rename.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gnne/embedding.hpp"
#include "gnne/evaluation.hpp"
#include "gnne/pipeline.hpp"

namespace gnne {

struct DatasetSpec {
  std::string name;
  std::string path;
};

struct ExperimentConfig {
  static constexpr int kSchemaVersion = 1;

  std::uint64_t seed = 42;
  std::string output_dir;  // empty: $GNNE_OUTPUT_DIR, else ./runs
  std::vector<DatasetSpec> datasets;
  std::vector<std::string> methods;  // empty: every registered method
  std::size_t ba_nodes = 1000;
  std::size_t ba_m = 2;
  TrainConfig train;
  DeepWalkConfig deepwalk;
  std::size_t ci_radius = 2;
  ComparisonConfig evaluation;

  /// Checks method names, dataset files and numeric ranges.
  void validate() const;
  /// Copies `seed` into the sub-configs that carry their own.
  void apply_seed();
  std::vector<std::string> method_names() const;
};

/// Parses a JSON config; unknown keys and wrong types raise DataError naming
/// the offending key. Relative dataset paths resolve against `base_dir`.
ExperimentConfig parse_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config_file(const std::filesystem::path& path);
/// Fully resolved config, keys in a fixed order.
std::string config_to_json(const ExperimentConfig& cfg);

/// Writes to `path` through a sibling temp file and a rename.
void write_file_atomic(const std::filesystem::path& path, const std::function<void(std::ostream&)>& write);

/// Precedence: explicit value, config value, $GNNE_OUTPUT_DIR, "runs".
std::filesystem::path output_root(const std::string& flag, const ExperimentConfig& cfg);
/// Creates <root>/<UTC timestamp>-<command>[-k] and returns it.
std::filesystem::path make_run_dir(const std::filesystem::path& root, const std::string& command);

void cmd_generate(std::size_t n, std::size_t m, std::uint64_t seed, const std::filesystem::path& out);

struct TrainOutputs {
  GnneModel gnne;
  std::optional<BaselineModels> baselines;
};

/// BA generation, SIR labels, GNNE training and (optionally) the GAT/GCN
/// baselines. Writes the BA edge list, labels, loss traces and checkpoints.
TrainOutputs cmd_train(const ExperimentConfig& cfg, const std::filesystem::path& dir, bool with_baselines);

/// Ranks one dataset with one method; model methods need `checkpoint`.
void cmd_rank(const ExperimentConfig& cfg, const std::string& dataset, const std::string& method,
              const std::optional<std::filesystem::path>& checkpoint, const std::filesystem::path& out);

enum class AttackMetric { lcc, efficiency, both };

/// Rankings come from CSV files written by cmd_rank; the method name is the
/// file stem without a leading "ranking_".
void cmd_attack(const ExperimentConfig& cfg, const std::string& dataset, const std::vector<std::filesystem::path>& rankings,
                AttackMetric metric, const std::filesystem::path& dir);
void cmd_spread(const ExperimentConfig& cfg, const std::string& dataset, const std::vector<std::filesystem::path>& rankings,
                const std::filesystem::path& dir);

/// End to end: train, rank every method on every dataset, write per-dataset
/// curves and reports plus cross-dataset tables.
void cmd_reproduce(const ExperimentConfig& cfg, const std::filesystem::path& dir);

}  // namespace gnne
