#pragma once

// Dense layers with hand-written backward passes: GCN propagation, multi-head
// graph attention, affine maps, mean squared error and Adam.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gnne/graph.hpp"
#include "gnne/matrix.hpp"
#include "gnne/rng.hpp"

namespace gnne::nn {

enum class Activation { identity, relu, elu };

double activate(Activation a, double z) noexcept;
/// Derivative expressed through the pre-activation z.
double activate_grad(Activation a, double z) noexcept;

inline constexpr double kLeakySlope = 0.2;

struct Parameter {
  std::string name;
  Matrix value;
  Matrix grad;

  Parameter() = default;
  Parameter(std::string n, Matrix v) : name(std::move(n)), value(std::move(v)), grad(value.rows(), value.cols()) {}
};

/// Uniform(-a, a) with a = sqrt(6 / (fan_in + fan_out)).
Matrix glorot_uniform(std::size_t rows, std::size_t cols, Rng& rng);

/// D^-1/2 (A + I) D^-1/2 with D the degree matrix of A + I.
SparseMatrix gcn_propagation(const Graph& g);
/// L = D - A in sparse form (the GCN input features).
SparseMatrix laplacian_sparse(const Graph& g);

/// Attention neighbourhoods N(i) + {i}, sorted, in CSR layout.
struct Neighborhoods {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> nodes;

  static Neighborhoods closed(const Graph& g);
  std::size_t num_nodes() const noexcept { return offsets.empty() ? 0 : offsets.size() - 1; }
};

/// Y = X W + b
class Linear {
 public:
  Linear() = default;
  Linear(std::size_t in, std::size_t out, const std::string& name, Rng& rng);

  Matrix forward(const Matrix& x);
  /// Accumulates parameter gradients; returns dL/dX.
  Matrix backward(const Matrix& dy);
  std::vector<Parameter*> parameters() { return {&weight, &bias}; }

  Parameter weight;  // in x out
  Parameter bias;    // 1 x out

 private:
  Matrix input_;
};

/// H' = act(S H W), evaluated as S (H W).
class GcnLayer {
 public:
  GcnLayer() = default;
  GcnLayer(std::size_t in, std::size_t out, Activation act, const std::string& name, Rng& rng);

  Matrix forward(const SparseMatrix& propagation, const Matrix& h);
  /// Sparse-input variant for the first layer; `h` must outlive backward().
  Matrix forward(const SparseMatrix& propagation, const SparseMatrix& h);
  /// Accumulates dW; returns dL/dH (empty for sparse input).
  Matrix backward(const Matrix& dout);
  std::vector<Parameter*> parameters() { return {&weight}; }

  Parameter weight;
  Activation activation = Activation::relu;

 private:
  const SparseMatrix* propagation_ = nullptr;
  const SparseMatrix* sparse_input_ = nullptr;
  Matrix dense_input_;
  Matrix pre_;  // S H W
};

/// Multi-head graph attention, heads concatenated:
///   e_ij = a_src . W h_i + a_dst . W h_j,  j in N(i) + {i}
///   alpha_ij = softmax_j LeakyReLU(e_ij)
///   h'_i = ||_k act(sum_j alpha^k_ij W^k h_j)
class GatLayer {
 public:
  GatLayer() = default;
  GatLayer(std::size_t in, std::size_t out, std::size_t heads, Activation act, const std::string& name, Rng& rng);

  Matrix forward(const Neighborhoods& nb, const Matrix& h);
  Matrix backward(const Matrix& dout);
  std::vector<Parameter*> parameters();

  std::size_t heads() const noexcept { return weights.size(); }
  std::size_t out_per_head() const noexcept { return weights.empty() ? 0 : weights.front().value.cols(); }
  /// Attention coefficients of one head, aligned with nb.nodes.
  std::span<const double> attention(std::size_t head) const { return alpha_[head]; }

  std::vector<Parameter> weights;   // in x out per head
  std::vector<Parameter> attn_src;  // out x 1 per head
  std::vector<Parameter> attn_dst;  // out x 1 per head
  Activation activation = Activation::elu;

 private:
  const Neighborhoods* nb_ = nullptr;
  Matrix input_;
  std::vector<Matrix> projected_;            // H W^k
  std::vector<std::vector<double>> score_;   // e_ij before LeakyReLU
  std::vector<std::vector<double>> alpha_;
  Matrix pre_;                               // concatenated aggregates before activation
};

double mse(const Matrix& pred, const Matrix& target);
/// d mse / d pred = 2 (pred - target) / N
Matrix mse_grad(const Matrix& pred, const Matrix& target);

struct AdamConfig {
  double learning_rate = 0.001;
  double weight_decay = 0.0005;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Adam with bias correction. Weight decay is added to the gradient before
/// the moment update (grad += wd * param).
class Adam {
 public:
  Adam(AdamConfig cfg, std::vector<Parameter*> params);

  void zero_grad();
  void step();
  std::size_t steps() const noexcept { return t_; }

 private:
  AdamConfig cfg_;
  std::vector<Parameter*> params_;
  std::vector<Matrix> m_;
  std::vector<Matrix> v_;
  std::size_t t_ = 0;
};

}  // namespace gnne::nn
