#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "doctest.h"
#include "gnne/error.hpp"
#include "gnne/pipeline.hpp"
#include "gnne/sir.hpp"
#include "support.hpp"

using namespace gnne;
using namespace testing;

namespace {

TrainConfig quick_config() {
  TrainConfig cfg;
  cfg.epochs_feature = 60;
  cfg.epochs_task = 120;
  cfg.label_runs = 30;
  cfg.seed = 5;
  return cfg;
}

}  // namespace

TEST_SUITE("gnne_pipeline") {

TEST_CASE("node entropy hand cases") {
  const auto k3 = entropy_scores(complete(3), std::vector<double>{0.4, 0.4, 0.4});
  for (double e : k3) CHECK(std::abs(e - 1.0) < 1e-12);

  const auto isolated = entropy_scores(make_graph(3, {{0, 1}}), std::vector<double>{1, 1, 1});
  CHECK(isolated[2] == 0.0);

  const auto st = entropy_scores(star(2), std::vector<double>{0.7, 0.7, 0.7});
  CHECK(std::abs(st[0]) < 1e-12);
  CHECK(std::abs(st[1] - 0.5) < 1e-12);
  CHECK(std::abs(st[2] - 0.5) < 1e-12);

  CHECK_THROWS_AS(entropy_scores(complete(3), std::vector<double>{1, 0, 1}), ArgumentError);
}

TEST_CASE("positive rescale") {
  const auto r = positive_rescale(std::vector<double>{-2.0, 0.0, 2.0});
  CHECK(r[0] == doctest::Approx(1e-6));
  CHECK(r[1] == doctest::Approx(0.5 + 0.5e-6));
  CHECK(r[2] == 1.0);
  for (double x : positive_rescale(std::vector<double>{3.0, 3.0})) CHECK(x == 1.0);
}

TEST_CASE("feature extractor on BA(1000, 2)") {
  const Graph g = generate_ba(1000, 2, 1);
  TrainConfig cfg;
  const auto a = train_feature_extractor(g, cfg, 17);
  CHECK(a.features.rows() == 1000);
  CHECK(a.features.cols() == 64);
  CHECK(a.loss_trace.size() == 500);
  CHECK(a.loss_trace.back() < a.loss_trace.front());
  CHECK(a.features.all_finite());
}

TEST_CASE("feature extractor shape and determinism on a small graph") {
  const Graph g = generate_ba(80, 2, 2);
  const auto cfg = quick_config();
  const auto a = train_feature_extractor(g, cfg, 3);
  const auto b = train_feature_extractor(g, cfg, 3);
  CHECK(a.features.rows() == 80);
  CHECK(a.features.cols() == 64);
  CHECK(a.features == b.features);
  CHECK(a.loss_trace == b.loss_trace);
}

TEST_CASE("task model training and transfer") {
  const Graph ba = generate_ba(150, 2, 3);
  const auto cfg = quick_config();
  const auto features = train_feature_extractor(ba, cfg, 4).features;
  const auto labels = sir_labels(ba, cfg);
  auto t1 = train_task_model(ba, features, labels, cfg);
  auto t2 = train_task_model(ba, features, labels, cfg);
  CHECK(t1.loss_trace.back() < t1.loss_trace.front());
  CHECK(t1.loss_trace == t2.loss_trace);

  const Graph other = generate_ba(61, 3, 9);
  const auto other_features = train_feature_extractor(other, cfg, 5).features;
  const auto y = infer_influence(other, other_features, t1.model);
  CHECK(y.size() == 61);
  for (double v : y) CHECK(std::isfinite(v));
  CHECK(y == infer_influence(other, other_features, t1.model));
  CHECK_THROWS_AS(infer_influence(other, Matrix(61, 3), t1.model), ArgumentError);
}

TEST_CASE("GNNE ranking, checkpoints and overlap with SIR ground truth") {
  const Graph training = generate_ba(300, 2, 7);
  TrainConfig cfg;
  cfg.label_runs = 200;
  cfg.seed = 11;
  GnneModel model = train_gnne(training, cfg);

  const Graph target = generate_ba(100, 2, 8);
  const RankedList r = rank_gnne(target, model);
  std::vector<NodeId> sorted = r.order;
  std::sort(sorted.begin(), sorted.end());
  for (NodeId v = 0; v < 100; ++v) CHECK(sorted[v] == v);
  CHECK(r.scores == rank_gnne(target, model).scores);

  const auto truth = RankedList::from_scores(sir_node_scores(target, epidemic_threshold(target), 2000, 99));
  const auto top = r.top(10);
  const std::set<NodeId> a(top.begin(), top.end());
  std::size_t overlap = 0;
  for (NodeId v : truth.top(10)) overlap += a.count(v);
  CHECK(overlap >= 5);

  std::stringstream buf;
  save_gnne_checkpoint(buf, model);
  const std::string text = buf.str();
  GnneModel restored = load_gnne_checkpoint(buf);
  CHECK(rank_gnne(target, restored).scores == r.scores);
  std::stringstream again;
  save_gnne_checkpoint(again, restored);
  CHECK(again.str() == text);

  std::stringstream broken("{\"format\": \"something else\"}");
  CHECK_THROWS_AS(load_gnne_checkpoint(broken), DataError);
}

TEST_CASE("embedding-initialised baselines") {
  const Graph training = generate_ba(120, 2, 2);
  auto cfg = quick_config();
  DeepWalkConfig walk;
  walk.walks_per_node = 3;
  walk.walk_length = 15;
  walk.skip_gram.epochs = 1;
  const auto labels = sir_labels(training, cfg);
  BaselineModels m = train_baselines(training, cfg, walk, labels);
  const Graph target = generate_ba(70, 2, 3);
  const auto gat = rank_gat_baseline(target, m);
  const auto gcn = rank_gcn_baseline(target, m);
  CHECK(gat.size() == 70);
  CHECK(gcn.size() == 70);

  std::stringstream buf;
  save_baseline_checkpoint(buf, m);
  BaselineModels restored = load_baseline_checkpoint(buf);
  CHECK(rank_gat_baseline(target, restored).scores == gat.scores);
  CHECK(rank_gcn_baseline(target, restored).scores == gcn.scores);
}

TEST_CASE("config validation") {
  TrainConfig cfg;
  cfg.learning_rate = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
  cfg = TrainConfig{};
  cfg.layers = 0;
  CHECK_THROWS_AS(cfg.validate(), ArgumentError);
}

}  // TEST_SUITE
