#include "gnne/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "json.hpp"

#include "gnne/error.hpp"
#include "gnne/sir.hpp"

namespace gnne {

namespace {

// Sub-stream tags for derive_seed(cfg.seed, {tag, ...}).
enum SeedTag : std::uint64_t {
  kFeatureTraining = 1,
  kTaskInit = 2,
  kSirLabels = 3,
  kTargetFeatures = 4,
  kWalkTraining = 5,
  kWalkTarget = 6,
  kGatBaseline = 7,
  kGcnBaseline = 8,
};

void check_finite(double loss, const char* what, std::size_t epoch) {
  if (!std::isfinite(loss)) {
    throw NumericError(std::string(what) + ": non-finite loss at epoch " + std::to_string(epoch));
  }
}

std::vector<std::size_t> gcn_feature_dims(std::size_t n, const TrainConfig& cfg) {
  std::vector<std::size_t> dims{n};
  for (std::size_t l = 1; l < cfg.layers; ++l) dims.push_back(cfg.gcn_hidden);
  dims.push_back(cfg.feature_dim);
  return dims;
}

std::vector<std::size_t> gcn_baseline_dims(std::size_t in, const TrainConfig& cfg) {
  std::vector<std::size_t> dims{in};
  for (std::size_t l = 0; l < cfg.layers; ++l) dims.push_back(cfg.gcn_hidden);
  return dims;
}

}  // namespace

void TrainConfig::validate() const {
  if (!(learning_rate > 0.0)) throw ArgumentError("learning_rate must be positive");
  if (weight_decay < 0.0) throw ArgumentError("weight_decay must be non-negative");
  if (layers < 1) throw ArgumentError("layers must be >= 1");
  if (gcn_hidden == 0 || feature_dim == 0 || gat_hidden == 0 || gat_out == 0 || gat_heads == 0) {
    throw ArgumentError("layer widths and head count must be positive");
  }
  if (label_runs < 1) throw ArgumentError("label_runs must be >= 1");
}

// --- GcnRegressor -----------------------------------------------------------

GcnRegressor::GcnRegressor(std::vector<std::size_t> dims, Rng& rng) : dims_(std::move(dims)) {
  if (dims_.size() < 2) throw ArgumentError("GcnRegressor: need at least one layer");
  for (std::size_t l = 0; l + 1 < dims_.size(); ++l) {
    layers_.emplace_back(dims_[l], dims_[l + 1], nn::Activation::relu, "gcn" + std::to_string(l), rng);
  }
  head_ = nn::Linear(dims_.back(), 1, "gcn_head", rng);
}

Matrix GcnRegressor::finish(const SparseMatrix& propagation, Matrix h) {
  for (std::size_t l = 1; l < layers_.size(); ++l) h = layers_[l].forward(propagation, h);
  hidden_ = std::move(h);
  return head_.forward(hidden_);
}

Matrix GcnRegressor::forward(const SparseMatrix& propagation, const SparseMatrix& input) {
  return finish(propagation, layers_.front().forward(propagation, input));
}

Matrix GcnRegressor::forward(const SparseMatrix& propagation, const Matrix& input) {
  return finish(propagation, layers_.front().forward(propagation, input));
}

void GcnRegressor::backward(const Matrix& dpred) {
  Matrix g = head_.backward(dpred);
  for (std::size_t l = layers_.size(); l-- > 0;) g = layers_[l].backward(g);
}

std::vector<nn::Parameter*> GcnRegressor::parameters() {
  std::vector<nn::Parameter*> out;
  for (auto& layer : layers_) {
    for (auto* p : layer.parameters()) out.push_back(p);
  }
  for (auto* p : head_.parameters()) out.push_back(p);
  return out;
}

// --- GatRegressor -----------------------------------------------------------

GatRegressor::GatRegressor(std::size_t input_dim, const TrainConfig& cfg, Rng& rng) : input_dim_(input_dim) {
  cfg.validate();
  std::size_t in = input_dim;
  for (std::size_t l = 0; l < cfg.layers; ++l) {
    const bool last = l + 1 == cfg.layers;
    const std::size_t heads = last && cfg.layers > 1 ? 1 : cfg.gat_heads;
    const std::size_t out = last ? cfg.gat_out : cfg.gat_hidden;
    const auto act = last ? nn::Activation::identity : nn::Activation::elu;
    layers_.emplace_back(in, out, heads, act, "gat" + std::to_string(l), rng);
    in = out * heads;
  }
  head_ = nn::Linear(in, 1, "gat_head", rng);
}

Matrix GatRegressor::forward(const nn::Neighborhoods& nb, const Matrix& features) {
  Matrix h = features;
  for (auto& layer : layers_) h = layer.forward(nb, h);
  return head_.forward(h);
}

void GatRegressor::backward(const Matrix& dpred) {
  Matrix g = head_.backward(dpred);
  for (std::size_t l = layers_.size(); l-- > 0;) g = layers_[l].backward(g);
}

std::vector<nn::Parameter*> GatRegressor::parameters() {
  std::vector<nn::Parameter*> out;
  for (auto& layer : layers_) {
    for (auto* p : layer.parameters()) out.push_back(p);
  }
  for (auto* p : head_.parameters()) out.push_back(p);
  return out;
}

// --- training ---------------------------------------------------------------

FeatureResult train_feature_extractor(const Graph& g, const TrainConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const std::size_t n = g.num_nodes();
  if (n == 0) throw ArgumentError("train_feature_extractor: empty graph");
  const SparseMatrix propagation = nn::gcn_propagation(g);
  const SparseMatrix input = nn::laplacian_sparse(g);
  const Matrix target = Matrix::column(g.degrees());

  Rng rng(seed);
  GcnRegressor net(gcn_feature_dims(n, cfg), rng);
  nn::Adam adam(cfg.adam(), net.parameters());
  FeatureResult result;
  result.loss_trace.reserve(cfg.epochs_feature);
  for (std::size_t epoch = 0; epoch < cfg.epochs_feature; ++epoch) {
    adam.zero_grad();
    const Matrix pred = net.forward(propagation, input);
    const double loss = nn::mse(pred, target);
    check_finite(loss, "feature extractor", epoch + 1);
    result.loss_trace.push_back(loss);
    net.backward(nn::mse_grad(pred, target));
    adam.step();
  }
  net.forward(propagation, input);
  result.features = net.hidden();
  if (!result.features.all_finite()) throw NumericError("feature extractor: non-finite features");
  return result;
}

namespace {

template <class Net, class Forward>
std::vector<double> fit_regressor(Net& net, const Matrix& target, const TrainConfig& cfg, const char* what,
                                  Forward&& forward) {
  nn::Adam adam(cfg.adam(), net.parameters());
  std::vector<double> trace;
  trace.reserve(cfg.epochs_task);
  for (std::size_t epoch = 0; epoch < cfg.epochs_task; ++epoch) {
    adam.zero_grad();
    const Matrix pred = forward();
    const double loss = nn::mse(pred, target);
    check_finite(loss, what, epoch + 1);
    trace.push_back(loss);
    net.backward(nn::mse_grad(pred, target));
    adam.step();
  }
  return trace;
}

Matrix normalized_labels(std::span<const double> labels, std::size_t n) {
  if (labels.size() != n) throw ArgumentError("label count does not match node count");
  Matrix target(n, 1);
  for (std::size_t i = 0; i < n; ++i) target(i, 0) = labels[i] / static_cast<double>(n);
  return target;
}

std::vector<double> column_values(const Matrix& m) {
  std::vector<double> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, 0);
  for (double x : out) {
    if (!std::isfinite(x)) throw NumericError("non-finite model output");
  }
  return out;
}

}  // namespace

TaskResult train_task_model(const Graph& g, const Matrix& features, std::span<const double> sir_labels,
                            const TrainConfig& cfg) {
  cfg.validate();
  const std::size_t n = g.num_nodes();
  if (features.rows() != n) throw ArgumentError("train_task_model: feature rows do not match node count");
  const Matrix target = normalized_labels(sir_labels, n);
  const auto nb = nn::Neighborhoods::closed(g);
  Rng rng(derive_seed(cfg.seed, {kTaskInit, features.cols()}));
  TaskResult result{GatRegressor(features.cols(), cfg, rng), {}};
  result.loss_trace = fit_regressor(result.model, target, cfg, "task model",
                                    [&] { return result.model.forward(nb, features); });
  return result;
}

std::vector<double> infer_influence(const Graph& g, const Matrix& features, GatRegressor& model) {
  if (features.cols() != model.input_dim()) throw ArgumentError("infer_influence: feature dimension mismatch");
  const auto nb = nn::Neighborhoods::closed(g);
  return column_values(model.forward(nb, features));
}

std::vector<double> positive_rescale(std::span<const double> y, double eps) {
  std::vector<double> out(y.size(), 1.0);
  if (y.empty()) return out;
  const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
  const double span = *hi - *lo;
  if (!(span > 0.0)) return out;
  for (std::size_t i = 0; i < y.size(); ++i) out[i] = eps + (1.0 - eps) * (y[i] - *lo) / span;
  return out;
}

std::vector<double> entropy_scores(const Graph& g, std::span<const double> y) {
  const std::size_t n = g.num_nodes();
  if (y.size() != n) throw ArgumentError("entropy_scores: influence vector length mismatch");
  for (double v : y) {
    if (!(v > 0.0)) throw ArgumentError("entropy_scores: influence factors must be strictly positive");
  }
  std::vector<double> mass(n, 0.0);
  for (NodeId j = 0; j < n; ++j) {
    for (NodeId k : g.neighbors(j)) mass[j] += y[k];
  }
  std::vector<double> e(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    double acc = 0.0;
    for (NodeId j : g.neighbors(i)) {
      const double p = y[i] / mass[j];
      acc -= p * std::log2(p);
    }
    e[i] = acc;
  }
  return e;
}

std::vector<double> sir_labels(const Graph& g, const TrainConfig& cfg) {
  return sir_node_scores(g, epidemic_threshold(g), cfg.label_runs, derive_seed(cfg.seed, {kSirLabels}));
}

GnneModel train_gnne(const Graph& training, const TrainConfig& cfg, std::optional<std::vector<double>> labels) {
  cfg.validate();
  GnneModel model;
  model.config = cfg;
  auto features = train_feature_extractor(training, cfg, derive_seed(cfg.seed, {kFeatureTraining}));
  model.feature_loss = std::move(features.loss_trace);
  const std::vector<double> y = labels ? std::move(*labels) : sir_labels(training, cfg);
  auto task = train_task_model(training, features.features, y, cfg);
  model.task = std::move(task.model);
  model.task_loss = std::move(task.loss_trace);
  return model;
}

std::vector<double> gnne_influence(const Graph& g, GnneModel& model) {
  const auto features = train_feature_extractor(g, model.config, derive_seed(model.config.seed, {kTargetFeatures}));
  return infer_influence(g, features.features, model.task);
}

RankedList rank_gnne(const Graph& g, GnneModel& model) {
  const auto y = positive_rescale(gnne_influence(g, model));
  return RankedList::from_scores(entropy_scores(g, y));
}

// --- baselines --------------------------------------------------------------

namespace {

Matrix walk_features(const Graph& g, const DeepWalkConfig& walk, std::uint64_t seed) {
  DeepWalkConfig cfg = walk;
  cfg.skip_gram.seed = seed;
  return deepwalk(g, cfg).vectors;
}

}  // namespace

BaselineModels train_baselines(const Graph& training, const TrainConfig& cfg, const DeepWalkConfig& walk,
                               std::span<const double> labels) {
  cfg.validate();
  BaselineModels models;
  models.config = cfg;
  models.walk = walk;
  const Matrix features = walk_features(training, walk, derive_seed(cfg.seed, {kWalkTraining}));
  const Matrix target = normalized_labels(labels, training.num_nodes());

  const auto nb = nn::Neighborhoods::closed(training);
  Rng gat_rng(derive_seed(cfg.seed, {kGatBaseline}));
  models.gat = GatRegressor(features.cols(), cfg, gat_rng);
  fit_regressor(models.gat, target, cfg, "GAT baseline", [&] { return models.gat.forward(nb, features); });

  const SparseMatrix propagation = nn::gcn_propagation(training);
  Rng gcn_rng(derive_seed(cfg.seed, {kGcnBaseline}));
  models.gcn = GcnRegressor(gcn_baseline_dims(features.cols(), cfg), gcn_rng);
  fit_regressor(models.gcn, target, cfg, "GCN baseline", [&] { return models.gcn.forward(propagation, features); });
  return models;
}

RankedList rank_gat_baseline(const Graph& g, BaselineModels& models) {
  const Matrix features = walk_features(g, models.walk, derive_seed(models.config.seed, {kWalkTarget}));
  return RankedList::from_scores(infer_influence(g, features, models.gat));
}

RankedList rank_gcn_baseline(const Graph& g, BaselineModels& models) {
  const Matrix features = walk_features(g, models.walk, derive_seed(models.config.seed, {kWalkTarget}));
  const SparseMatrix propagation = nn::gcn_propagation(g);
  return RankedList::from_scores(column_values(models.gcn.forward(propagation, features)));
}

// --- checkpoints ------------------------------------------------------------

namespace {

using nlohmann::json;

constexpr const char* kFormat = "gnne-checkpoint";
constexpr int kVersion = 1;

json config_to_json(const TrainConfig& c) {
  return {{"learning_rate", c.learning_rate}, {"weight_decay", c.weight_decay}, {"epochs_feature", c.epochs_feature},
          {"epochs_task", c.epochs_task},     {"layers", c.layers},             {"gcn_hidden", c.gcn_hidden},
          {"feature_dim", c.feature_dim},     {"gat_hidden", c.gat_hidden},     {"gat_heads", c.gat_heads},
          {"gat_out", c.gat_out},             {"label_runs", c.label_runs},     {"seed", c.seed}};
}

TrainConfig config_from_json(const json& j) {
  TrainConfig c;
  c.learning_rate = j.at("learning_rate").get<double>();
  c.weight_decay = j.at("weight_decay").get<double>();
  c.epochs_feature = j.at("epochs_feature").get<std::size_t>();
  c.epochs_task = j.at("epochs_task").get<std::size_t>();
  c.layers = j.at("layers").get<std::size_t>();
  c.gcn_hidden = j.at("gcn_hidden").get<std::size_t>();
  c.feature_dim = j.at("feature_dim").get<std::size_t>();
  c.gat_hidden = j.at("gat_hidden").get<std::size_t>();
  c.gat_heads = j.at("gat_heads").get<std::size_t>();
  c.gat_out = j.at("gat_out").get<std::size_t>();
  c.label_runs = j.at("label_runs").get<std::size_t>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.validate();
  return c;
}

json walk_to_json(const DeepWalkConfig& w) {
  return {{"walks_per_node", w.walks_per_node}, {"walk_length", w.walk_length},
          {"dimensions", w.skip_gram.dimensions}, {"window", w.skip_gram.window},
          {"negatives", w.skip_gram.negatives},   {"epochs", w.skip_gram.epochs},
          {"learning_rate", w.skip_gram.learning_rate}};
}

DeepWalkConfig walk_from_json(const json& j) {
  DeepWalkConfig w;
  w.walks_per_node = j.at("walks_per_node").get<std::size_t>();
  w.walk_length = j.at("walk_length").get<std::size_t>();
  w.skip_gram.dimensions = j.at("dimensions").get<std::size_t>();
  w.skip_gram.window = j.at("window").get<std::size_t>();
  w.skip_gram.negatives = j.at("negatives").get<std::size_t>();
  w.skip_gram.epochs = j.at("epochs").get<std::size_t>();
  w.skip_gram.learning_rate = j.at("learning_rate").get<double>();
  return w;
}

json params_to_json(const std::vector<nn::Parameter*>& params) {
  json arr = json::array();
  for (const nn::Parameter* p : params) {
    arr.push_back({{"name", p->name},
                   {"rows", p->value.rows()},
                   {"cols", p->value.cols()},
                   {"data", std::vector<double>(p->value.data().begin(), p->value.data().end())}});
  }
  return arr;
}

void params_from_json(const json& arr, const std::vector<nn::Parameter*>& params) {
  if (!arr.is_array() || arr.size() != params.size()) throw DataError("checkpoint: parameter count mismatch");
  for (std::size_t q = 0; q < params.size(); ++q) {
    const json& j = arr[q];
    nn::Parameter& p = *params[q];
    if (j.at("name").get<std::string>() != p.name || j.at("rows").get<std::size_t>() != p.value.rows() ||
        j.at("cols").get<std::size_t>() != p.value.cols()) {
      throw DataError("checkpoint: parameter '" + p.name + "' does not match the architecture");
    }
    const auto data = j.at("data").get<std::vector<double>>();
    if (data.size() != p.value.size()) throw DataError("checkpoint: parameter '" + p.name + "' has wrong length");
    std::copy(data.begin(), data.end(), p.value.data().begin());
  }
}

json read_document(std::istream& in, const std::string& kind) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw DataError(std::string("checkpoint: invalid JSON: ") + e.what());
  }
  if (doc.value("format", "") != kFormat) throw DataError("checkpoint: not a gnne checkpoint");
  if (doc.value("version", 0) != kVersion) throw DataError("checkpoint: unsupported version");
  if (doc.value("kind", "") != kind) {
    throw DataError("checkpoint: expected kind '" + kind + "', found '" + doc.value("kind", "") + "'");
  }
  return doc;
}

}  // namespace

void save_gnne_checkpoint(std::ostream& out, GnneModel& model) {
  json doc = {{"format", kFormat},
              {"version", kVersion},
              {"kind", "gnne"},
              {"config", config_to_json(model.config)},
              {"input_dim", model.task.input_dim()},
              {"parameters", params_to_json(model.task.parameters())}};
  out << doc.dump(1) << '\n';
}

GnneModel load_gnne_checkpoint(std::istream& in) {
  try {
    const json doc = read_document(in, "gnne");
    GnneModel model;
    model.config = config_from_json(doc.at("config"));
    Rng rng(0);
    model.task = GatRegressor(doc.at("input_dim").get<std::size_t>(), model.config, rng);
    params_from_json(doc.at("parameters"), model.task.parameters());
    return model;
  } catch (const json::exception& e) {
    throw DataError(std::string("checkpoint: ") + e.what());
  }
}

void save_baseline_checkpoint(std::ostream& out, BaselineModels& models) {
  json doc = {{"format", kFormat},
              {"version", kVersion},
              {"kind", "baselines"},
              {"config", config_to_json(models.config)},
              {"walk", walk_to_json(models.walk)},
              {"gat_input_dim", models.gat.input_dim()},
              {"gcn_dims", models.gcn.dims()},
              {"gat_parameters", params_to_json(models.gat.parameters())},
              {"gcn_parameters", params_to_json(models.gcn.parameters())}};
  out << doc.dump(1) << '\n';
}

BaselineModels load_baseline_checkpoint(std::istream& in) {
  try {
    const json doc = read_document(in, "baselines");
    BaselineModels models;
    models.config = config_from_json(doc.at("config"));
    models.walk = walk_from_json(doc.at("walk"));
    Rng rng(0);
    models.gat = GatRegressor(doc.at("gat_input_dim").get<std::size_t>(), models.config, rng);
    models.gcn = GcnRegressor(doc.at("gcn_dims").get<std::vector<std::size_t>>(), rng);
    params_from_json(doc.at("gat_parameters"), models.gat.parameters());
    params_from_json(doc.at("gcn_parameters"), models.gcn.parameters());
    return models;
  } catch (const json::exception& e) {
    throw DataError(std::string("checkpoint: ") + e.what());
  }
}

}  // namespace gnne
