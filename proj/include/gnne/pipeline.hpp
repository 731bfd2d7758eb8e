#pragma once

// Feature extraction (GCN on Laplacian rows, degree labels), task learning
// (GAT on BA features, SIR labels) and entropy ranking, plus the GCN/GAT
// baselines that start from random-walk embeddings instead.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gnne/embedding.hpp"
#include "gnne/graph.hpp"
#include "gnne/matrix.hpp"
#include "gnne/nn.hpp"
#include "gnne/ranked_list.hpp"

namespace gnne {

struct TrainConfig {
  double learning_rate = 0.001;
  double weight_decay = 0.0005;
  std::size_t epochs_feature = 500;
  std::size_t epochs_task = 2000;
  std::size_t layers = 2;          // depth of both the GCN and the GAT stack
  std::size_t gcn_hidden = 16;
  std::size_t feature_dim = 64;
  std::size_t gat_hidden = 16;     // per head
  std::size_t gat_heads = 2;
  std::size_t gat_out = 16;
  std::size_t label_runs = 1000;   // SIR runs per node for task labels
  std::uint64_t seed = 42;

  void validate() const;
  nn::AdamConfig adam() const { return {learning_rate, weight_decay}; }
};

/// GCN stack followed by a linear head with one output.
class GcnRegressor {
 public:
  GcnRegressor() = default;
  /// dims = {input, hidden..., last}; every GCN layer uses ReLU.
  GcnRegressor(std::vector<std::size_t> dims, Rng& rng);

  Matrix forward(const SparseMatrix& propagation, const SparseMatrix& input);
  Matrix forward(const SparseMatrix& propagation, const Matrix& input);
  void backward(const Matrix& dpred);
  /// Output of the last GCN layer from the latest forward pass.
  const Matrix& hidden() const noexcept { return hidden_; }
  std::vector<nn::Parameter*> parameters();
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

 private:
  Matrix finish(const SparseMatrix& propagation, Matrix h);

  std::vector<std::size_t> dims_;
  std::vector<nn::GcnLayer> layers_;
  nn::Linear head_;
  Matrix hidden_;
};

/// GAT stack followed by a linear head with one output. Hidden layers use
/// `heads` concatenated ELU heads; the last layer has one identity head
/// (or `heads` when the stack has a single layer).
class GatRegressor {
 public:
  GatRegressor() = default;
  GatRegressor(std::size_t input_dim, const TrainConfig& cfg, Rng& rng);

  Matrix forward(const nn::Neighborhoods& nb, const Matrix& features);
  void backward(const Matrix& dpred);
  std::vector<nn::Parameter*> parameters();
  std::size_t input_dim() const noexcept { return input_dim_; }
  const nn::GatLayer& layer(std::size_t i) const { return layers_.at(i); }

 private:
  std::size_t input_dim_ = 0;
  std::vector<nn::GatLayer> layers_;
  nn::Linear head_;
};

struct FeatureResult {
  Matrix features;  // n x feature_dim
  std::vector<double> loss_trace;
};

/// Trains GCN(n -> ... -> feature_dim) + linear against raw degrees with the
/// Laplacian rows as input, returns the last GCN activations.
FeatureResult train_feature_extractor(const Graph& g, const TrainConfig& cfg, std::uint64_t seed);

struct TaskResult {
  GatRegressor model;
  std::vector<double> loss_trace;
};

/// Trains the GAT regressor against SIR labels divided by n.
TaskResult train_task_model(const Graph& g, const Matrix& features, std::span<const double> sir_labels,
                            const TrainConfig& cfg);

std::vector<double> infer_influence(const Graph& g, const Matrix& features, GatRegressor& model);

/// Affine min-max map onto [eps, 1]; constant input maps to all ones.
std::vector<double> positive_rescale(std::span<const double> y, double eps = 1e-6);

/// E_i = -sum_{j in N(i)} (y_i / Y_j) log2(y_i / Y_j), Y_j = sum_{k in N(j)} y_k.
/// Requires y > 0; isolated nodes score 0.
std::vector<double> entropy_scores(const Graph& g, std::span<const double> y);

/// Everything produced by training on the synthetic network.
struct GnneModel {
  GatRegressor task;
  TrainConfig config;
  std::vector<double> feature_loss;
  std::vector<double> task_loss;
};

/// SIR labels at the epidemic threshold, `cfg.label_runs` runs per node.
std::vector<double> sir_labels(const Graph& g, const TrainConfig& cfg);

GnneModel train_gnne(const Graph& training, const TrainConfig& cfg, std::optional<std::vector<double>> labels = {});

/// Fits a fresh feature extractor on `g`, runs the task model and ranks by
/// node entropy.
RankedList rank_gnne(const Graph& g, GnneModel& model);

/// Influence factors only (before rescaling), for inspection.
std::vector<double> gnne_influence(const Graph& g, GnneModel& model);

// --- embedding-initialised baselines -------------------------------------

struct BaselineModels {
  GatRegressor gat;
  GcnRegressor gcn;
  TrainConfig config;
  DeepWalkConfig walk;
};

BaselineModels train_baselines(const Graph& training, const TrainConfig& cfg, const DeepWalkConfig& walk,
                               std::span<const double> labels);
RankedList rank_gat_baseline(const Graph& g, BaselineModels& models);
RankedList rank_gcn_baseline(const Graph& g, BaselineModels& models);

// --- checkpoints ------------------------------------------------------------

/// JSON checkpoint: format tag, version, architecture, then every parameter as
/// name, shape and a flat row-major array. Doubles round-trip exactly.
void save_gnne_checkpoint(std::ostream& out, GnneModel& model);
GnneModel load_gnne_checkpoint(std::istream& in);
void save_baseline_checkpoint(std::ostream& out, BaselineModels& models);
BaselineModels load_baseline_checkpoint(std::istream& in);

}  // namespace gnne
