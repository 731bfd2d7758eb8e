#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gnne/error.hpp"
#include "gnne/experiment.hpp"

using namespace gnne;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("gnne_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("config defaults and overrides") {
  const auto cfg = parse(R"({"schema_version": 1, "seed": 9, "training": {"epochs_task": 10}})");
  CHECK(cfg.seed == 9);
  CHECK(cfg.train.epochs_task == 10);
  CHECK(cfg.train.epochs_feature == 500);
  CHECK(cfg.train.learning_rate == 0.001);
  CHECK(cfg.train.gat_heads == 2);
  CHECK(cfg.ba_nodes == 1000);
  CHECK(cfg.method_names().size() == 13);
  CHECK_FALSE(cfg.evaluation.beta.has_value());
}

TEST_CASE("config schema violations") {
  CHECK_THROWS_AS(parse(R"({"seed": 1})"), DataError);
  CHECK_THROWS_AS(parse(R"({"schema_version": 2})"), DataError);
  CHECK_THROWS_AS(parse(R"({"schema_version": 1, "sede": 1})"), DataError);
  CHECK_THROWS_AS(parse(R"({"schema_version": 1, "training": {"epochs": 1}})"), DataError);
  CHECK_THROWS_AS(parse(R"({"schema_version": 1, "training": {"label_runs": -4}})"), DataError);
  CHECK_THROWS_AS(parse(R"({"schema_version": 1, "evaluation": {"efficiency_base": "all"}})"), DataError);
  CHECK_THROWS_AS(parse("{not json"), DataError);
  try {
    parse(R"({"schema_version": 1, "deepwalk": {"window": "five"}})");
    FAIL("expected an error");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("deepwalk.window") != std::string::npos);
  }
  auto cfg = parse(R"({"schema_version": 1, "methods": ["DC", "XYZ"]})");
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg = parse(R"({"schema_version": 1, "datasets": [{"name": "x", "path": "/no/such/file"}]})");
  CHECK_THROWS_AS(cfg.validate(), DataError);
}

TEST_CASE("resolved config round-trips") {
  const auto cfg = parse(R"({"schema_version": 1, "seed": 3, "evaluation": {"beta": 0.125, "efficiency_base": "original"}})");
  const std::string text = config_to_json(cfg);
  const auto again = parse(text);
  CHECK(config_to_json(again) == text);
  CHECK(*again.evaluation.beta == 0.125);
  CHECK(again.evaluation.efficiency_base == EfficiencyBase::original);
}

TEST_CASE("generate is byte-identical for a fixed seed") {
  const fs::path dir = scratch("generate");
  cmd_generate(1000, 2, 7, dir / "a.txt");
  cmd_generate(1000, 2, 7, dir / "b.txt");
  CHECK(slurp(dir / "a.txt") == slurp(dir / "b.txt"));
  cmd_generate(1000, 2, 8, dir / "c.txt");
  CHECK(slurp(dir / "a.txt") != slurp(dir / "c.txt"));
  for (const auto& e : fs::directory_iterator(dir)) CHECK(e.path().extension() == ".txt");
}

TEST_CASE("run directories are unique") {
  const fs::path root = scratch("runs");
  const auto a = make_run_dir(root, "rank");
  const auto b = make_run_dir(root, "rank");
  CHECK(a != b);
  CHECK(fs::is_directory(a));
  CHECK(output_root("explicit", ExperimentConfig{}) == "explicit");
}

TEST_CASE("rank rejects unknown methods") {
  const fs::path dir = scratch("rank");
  ExperimentConfig cfg;
  try {
    cmd_rank(cfg, GNNE_DATA_DIR "/karate.txt", "XYZ", std::nullopt, dir / "r.csv");
    FAIL("expected an error");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("HC, DC, CI") != std::string::npos);
  }
  CHECK_THROWS_AS(cmd_rank(cfg, GNNE_DATA_DIR "/karate.txt", "GNNE", std::nullopt, dir / "r.csv"), ArgumentError);
  cmd_rank(cfg, GNNE_DATA_DIR "/karate.txt", "DC", std::nullopt, dir / "ranking_DC.csv");
  CHECK(slurp(dir / "ranking_DC.csv").rfind("node_label,score,rank\n33,", 0) == 0);
}

TEST_CASE("reproduce on the bundled dataset") {
  const fs::path dir = scratch("reproduce");
  std::istringstream in(R"({
    "schema_version": 1, "seed": 4,
    "datasets": [{"name": "karate", "path": ")" GNNE_DATA_DIR R"(/karate.txt"}],
    "training": {"ba_nodes": 120, "epochs_feature": 30, "epochs_task": 60, "label_runs": 20},
    "deepwalk": {"walks_per_node": 2, "walk_length": 10, "epochs": 1},
    "evaluation": {"spreading_runs": 50}
  })");
  const auto cfg = parse_config(in);
  cmd_reproduce(cfg, dir);
  std::istringstream table(slurp(dir / "table_lcc.csv"));
  std::string line;
  std::getline(table, line);
  CHECK(line == "method,karate");
  std::size_t rows = 0;
  while (std::getline(table, line)) ++rows;
  CHECK(rows == 13);
  CHECK(fs::exists(dir / "config.json"));
  CHECK(fs::exists(dir / "gnne_checkpoint.json"));
  CHECK(fs::exists(dir / "karate" / "spread_GNNE.csv"));
  CHECK(fs::exists(dir / "karate" / "report.csv"));

  // Attack and spread from the written rankings.
  const fs::path att = dir / "attack";
  cmd_attack(cfg, GNNE_DATA_DIR "/karate.txt", {dir / "karate" / "ranking_DC.csv", dir / "karate" / "ranking_GNNE.csv"},
             AttackMetric::both, att);
  CHECK(fs::exists(att / "lcc_GNNE.csv"));
  CHECK(slurp(att / "lcc_DC.csv") == slurp(dir / "karate" / "lcc_DC.csv"));
  const fs::path spr = dir / "spread";
  cmd_spread(cfg, GNNE_DATA_DIR "/karate.txt", {dir / "karate" / "ranking_DC.csv"}, spr);
  CHECK(slurp(spr / "spread_DC.csv") == slurp(dir / "karate" / "spread_DC.csv"));
}

}  // TEST_SUITE
