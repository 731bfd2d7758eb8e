#include "gnne/nn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gnne/error.hpp"

namespace gnne::nn {

double activate(Activation a, double z) noexcept {
  switch (a) {
    case Activation::relu:
      return z > 0.0 ? z : 0.0;
    case Activation::elu:
      return z > 0.0 ? z : std::expm1(z);
    case Activation::identity:
      break;
  }
  return z;
}

double activate_grad(Activation a, double z) noexcept {
  switch (a) {
    case Activation::relu:
      return z > 0.0 ? 1.0 : 0.0;
    case Activation::elu:
      return z > 0.0 ? 1.0 : std::exp(z);
    case Activation::identity:
      break;
  }
  return 1.0;
}

Matrix glorot_uniform(std::size_t rows, std::size_t cols, Rng& rng) {
  const double limit = std::sqrt(6.0 / static_cast<double>(rows + cols));
  Matrix m(rows, cols);
  for (double& x : m.data()) x = (2.0 * uniform01(rng) - 1.0) * limit;
  return m;
}

SparseMatrix gcn_propagation(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> inv_sqrt(n);
  for (NodeId v = 0; v < n; ++v) inv_sqrt[v] = 1.0 / std::sqrt(static_cast<double>(g.degree(v) + 1));
  std::vector<std::size_t> row_ptr{0}, cols;
  std::vector<double> vals;
  row_ptr.reserve(n + 1);
  cols.reserve(2 * g.num_edges() + n);
  vals.reserve(2 * g.num_edges() + n);
  for (NodeId i = 0; i < n; ++i) {
    bool self_done = false;
    for (NodeId j : g.neighbors(i)) {
      if (!self_done && j > i) {
        cols.push_back(i);
        vals.push_back(inv_sqrt[i] * inv_sqrt[i]);
        self_done = true;
      }
      cols.push_back(j);
      vals.push_back(inv_sqrt[i] * inv_sqrt[j]);
    }
    if (!self_done) {
      cols.push_back(i);
      vals.push_back(inv_sqrt[i] * inv_sqrt[i]);
    }
    row_ptr.push_back(cols.size());
  }
  return SparseMatrix(n, n, std::move(row_ptr), std::move(cols), std::move(vals));
}

SparseMatrix laplacian_sparse(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::size_t> row_ptr{0}, cols;
  std::vector<double> vals;
  for (NodeId i = 0; i < n; ++i) {
    bool self_done = false;
    for (NodeId j : g.neighbors(i)) {
      if (!self_done && j > i) {
        cols.push_back(i);
        vals.push_back(static_cast<double>(g.degree(i)));
        self_done = true;
      }
      cols.push_back(j);
      vals.push_back(-1.0);
    }
    if (!self_done) {
      cols.push_back(i);
      vals.push_back(static_cast<double>(g.degree(i)));
    }
    row_ptr.push_back(cols.size());
  }
  return SparseMatrix(n, n, std::move(row_ptr), std::move(cols), std::move(vals));
}

Neighborhoods Neighborhoods::closed(const Graph& g) {
  Neighborhoods nb;
  nb.offsets.push_back(0);
  for (NodeId i = 0; i < g.num_nodes(); ++i) {
    bool self_done = false;
    for (NodeId j : g.neighbors(i)) {
      if (!self_done && j > i) {
        nb.nodes.push_back(i);
        self_done = true;
      }
      nb.nodes.push_back(j);
    }
    if (!self_done) nb.nodes.push_back(i);
    nb.offsets.push_back(nb.nodes.size());
  }
  return nb;
}

// ---------------------------------------------------------------------------

Linear::Linear(std::size_t in, std::size_t out, const std::string& name, Rng& rng)
    : weight(name + ".weight", glorot_uniform(in, out, rng)), bias(name + ".bias", Matrix(1, out)) {}

Matrix Linear::forward(const Matrix& x) {
  input_ = x;
  Matrix y = matmul(x, weight.value);
  for (std::size_t i = 0; i < y.rows(); ++i) {
    auto row = y.row(i);
    for (std::size_t j = 0; j < y.cols(); ++j) row[j] += bias.value(0, j);
  }
  return y;
}

Matrix Linear::backward(const Matrix& dy) {
  Matrix dw = matmul_tn(input_, dy);
  for (std::size_t k = 0; k < dw.size(); ++k) weight.grad.data()[k] += dw.data()[k];
  for (std::size_t i = 0; i < dy.rows(); ++i) {
    for (std::size_t j = 0; j < dy.cols(); ++j) bias.grad(0, j) += dy(i, j);
  }
  return matmul_nt(dy, weight.value);
}

// ---------------------------------------------------------------------------

GcnLayer::GcnLayer(std::size_t in, std::size_t out, Activation act, const std::string& name, Rng& rng)
    : weight(name + ".weight", glorot_uniform(in, out, rng)), activation(act) {}

namespace {

Matrix apply_activation(Activation act, const Matrix& pre) {
  Matrix out = pre;
  for (double& x : out.data()) x = activate(act, x);
  return out;
}

}  // namespace

Matrix GcnLayer::forward(const SparseMatrix& propagation, const Matrix& h) {
  if (propagation.cols() != h.rows()) throw ArgumentError("gcn_forward: propagation/feature row mismatch");
  propagation_ = &propagation;
  sparse_input_ = nullptr;
  dense_input_ = h;
  pre_ = propagation.multiply(matmul(h, weight.value));
  return apply_activation(activation, pre_);
}

Matrix GcnLayer::forward(const SparseMatrix& propagation, const SparseMatrix& h) {
  if (propagation.cols() != h.rows()) throw ArgumentError("gcn_forward: propagation/feature row mismatch");
  propagation_ = &propagation;
  sparse_input_ = &h;
  dense_input_ = Matrix();
  pre_ = propagation.multiply(h.multiply(weight.value));
  return apply_activation(activation, pre_);
}

Matrix GcnLayer::backward(const Matrix& dout) {
  Matrix dpre = dout;
  for (std::size_t k = 0; k < dpre.size(); ++k) dpre.data()[k] *= activate_grad(activation, pre_.data()[k]);
  const Matrix g = propagation_->transpose_multiply(dpre);  // dL/d(HW)
  const Matrix dw = sparse_input_ ? sparse_input_->transpose_multiply(g) : matmul_tn(dense_input_, g);
  for (std::size_t k = 0; k < dw.size(); ++k) weight.grad.data()[k] += dw.data()[k];
  if (sparse_input_) return Matrix();
  return matmul_nt(g, weight.value);
}

// ---------------------------------------------------------------------------

GatLayer::GatLayer(std::size_t in, std::size_t out, std::size_t heads, Activation act, const std::string& name,
                   Rng& rng)
    : activation(act) {
  if (heads == 0) throw ArgumentError("GatLayer: heads must be >= 1");
  for (std::size_t k = 0; k < heads; ++k) {
    const std::string prefix = name + ".head" + std::to_string(k);
    weights.emplace_back(prefix + ".weight", glorot_uniform(in, out, rng));
    attn_src.emplace_back(prefix + ".attn_src", glorot_uniform(out, 1, rng));
    attn_dst.emplace_back(prefix + ".attn_dst", glorot_uniform(out, 1, rng));
  }
}

std::vector<Parameter*> GatLayer::parameters() {
  std::vector<Parameter*> out;
  for (std::size_t k = 0; k < heads(); ++k) {
    out.push_back(&weights[k]);
    out.push_back(&attn_src[k]);
    out.push_back(&attn_dst[k]);
  }
  return out;
}

Matrix GatLayer::forward(const Neighborhoods& nb, const Matrix& h) {
  const std::size_t n = h.rows();
  if (nb.num_nodes() != n) throw ArgumentError("gat_forward: neighbourhood/feature row mismatch");
  if (h.cols() != weights.front().value.rows()) throw ArgumentError("gat_forward: input dimension mismatch");
  const std::size_t out = out_per_head();
  nb_ = &nb;
  input_ = h;
  projected_.assign(heads(), Matrix());
  score_.assign(heads(), std::vector<double>(nb.nodes.size()));
  alpha_.assign(heads(), std::vector<double>(nb.nodes.size()));
  pre_ = Matrix(n, out * heads());

  std::vector<double> src(n), dst(n);
  for (std::size_t k = 0; k < heads(); ++k) {
    const Matrix& z = projected_[k] = matmul(h, weights[k].value);
    const auto a_src = attn_src[k].value.data();
    const auto a_dst = attn_dst[k].value.data();
    for (std::size_t i = 0; i < n; ++i) {
      auto zi = z.row(i);
      double s = 0.0, d = 0.0;
      for (std::size_t c = 0; c < out; ++c) {
        s += a_src[c] * zi[c];
        d += a_dst[c] * zi[c];
      }
      src[i] = s;
      dst[i] = d;
    }
    auto& e = score_[k];
    auto& alpha = alpha_[k];
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t lo = nb.offsets[i], hi = nb.offsets[i + 1];
      double mx = -std::numeric_limits<double>::infinity();
      for (std::size_t p = lo; p < hi; ++p) {
        e[p] = src[i] + dst[nb.nodes[p]];
        const double l = e[p] > 0.0 ? e[p] : kLeakySlope * e[p];
        alpha[p] = l;
        mx = std::max(mx, l);
      }
      double total = 0.0;
      for (std::size_t p = lo; p < hi; ++p) total += (alpha[p] = std::exp(alpha[p] - mx));
      auto agg = pre_.row(i).subspan(k * out, out);
      for (std::size_t p = lo; p < hi; ++p) {
        alpha[p] /= total;
        auto zj = z.row(nb.nodes[p]);
        for (std::size_t c = 0; c < out; ++c) agg[c] += alpha[p] * zj[c];
      }
    }
  }
  return apply_activation(activation, pre_);
}

Matrix GatLayer::backward(const Matrix& dout) {
  const Neighborhoods& nb = *nb_;
  const std::size_t n = input_.rows();
  const std::size_t out = out_per_head();
  Matrix dinput(n, input_.cols());
  std::vector<double> dsrc(n), ddst(n);
  for (std::size_t k = 0; k < heads(); ++k) {
    const Matrix& z = projected_[k];
    const auto& e = score_[k];
    const auto& alpha = alpha_[k];
    const auto a_src = attn_src[k].value.data();
    const auto a_dst = attn_dst[k].value.data();
    Matrix dz(n, out);
    std::fill(dsrc.begin(), dsrc.end(), 0.0);
    std::fill(ddst.begin(), ddst.end(), 0.0);
    std::vector<double> dagg(out);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < out; ++c) {
        const std::size_t col = k * out + c;
        dagg[c] = dout(i, col) * activate_grad(activation, pre_(i, col));
      }
      const std::size_t lo = nb.offsets[i], hi = nb.offsets[i + 1];
      // d alpha_ij = dagg . z_j, then through the softmax and LeakyReLU
      double weighted = 0.0;
      std::vector<double> dalpha(hi - lo);
      for (std::size_t p = lo; p < hi; ++p) {
        const NodeId j = nb.nodes[p];
        auto zj = z.row(j);
        auto dzj = dz.row(j);
        double s = 0.0;
        for (std::size_t c = 0; c < out; ++c) {
          s += dagg[c] * zj[c];
          dzj[c] += alpha[p] * dagg[c];
        }
        dalpha[p - lo] = s;
        weighted += alpha[p] * s;
      }
      for (std::size_t p = lo; p < hi; ++p) {
        const double dl = alpha[p] * (dalpha[p - lo] - weighted);
        const double de = dl * (e[p] > 0.0 ? 1.0 : kLeakySlope);
        dsrc[i] += de;
        ddst[nb.nodes[p]] += de;
      }
    }
    // e_ij = a_src . z_i + a_dst . z_j
    auto ga_src = attn_src[k].grad.data();
    auto ga_dst = attn_dst[k].grad.data();
    for (std::size_t i = 0; i < n; ++i) {
      auto zi = z.row(i);
      auto dzi = dz.row(i);
      for (std::size_t c = 0; c < out; ++c) {
        ga_src[c] += dsrc[i] * zi[c];
        ga_dst[c] += ddst[i] * zi[c];
        dzi[c] += dsrc[i] * a_src[c] + ddst[i] * a_dst[c];
      }
    }
    const Matrix dw = matmul_tn(input_, dz);
    for (std::size_t q = 0; q < dw.size(); ++q) weights[k].grad.data()[q] += dw.data()[q];
    const Matrix dh = matmul_nt(dz, weights[k].value);
    for (std::size_t q = 0; q < dh.size(); ++q) dinput.data()[q] += dh.data()[q];
  }
  return dinput;
}

// ---------------------------------------------------------------------------

double mse(const Matrix& pred, const Matrix& target) {
  if (pred.rows() != target.rows() || pred.cols() != target.cols()) throw ArgumentError("mse: shape mismatch");
  if (pred.size() == 0) return 0.0;
  double acc = 0.0;
  for (std::size_t k = 0; k < pred.size(); ++k) {
    const double d = pred.data()[k] - target.data()[k];
    acc += d * d;
  }
  return acc / static_cast<double>(pred.size());
}

Matrix mse_grad(const Matrix& pred, const Matrix& target) {
  if (pred.rows() != target.rows() || pred.cols() != target.cols()) throw ArgumentError("mse: shape mismatch");
  Matrix g(pred.rows(), pred.cols());
  const double scale = 2.0 / static_cast<double>(std::max<std::size_t>(pred.size(), 1));
  for (std::size_t k = 0; k < pred.size(); ++k) g.data()[k] = scale * (pred.data()[k] - target.data()[k]);
  return g;
}

// ---------------------------------------------------------------------------

Adam::Adam(AdamConfig cfg, std::vector<Parameter*> params) : cfg_(cfg), params_(std::move(params)) {
  for (const Parameter* p : params_) {
    m_.emplace_back(p->value.rows(), p->value.cols());
    v_.emplace_back(p->value.rows(), p->value.cols());
  }
}

void Adam::zero_grad() {
  for (Parameter* p : params_) p->grad.fill(0.0);
}

void Adam::step() {
  ++t_;
  const double bc1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(t_));
  for (std::size_t q = 0; q < params_.size(); ++q) {
    auto value = params_[q]->value.data();
    auto grad = params_[q]->grad.data();
    auto m = m_[q].data();
    auto v = v_[q].data();
    for (std::size_t k = 0; k < value.size(); ++k) {
      const double g = grad[k] + cfg_.weight_decay * value[k];
      m[k] = cfg_.beta1 * m[k] + (1.0 - cfg_.beta1) * g;
      v[k] = cfg_.beta2 * v[k] + (1.0 - cfg_.beta2) * g * g;
      value[k] -= cfg_.learning_rate * (m[k] / bc1) / (std::sqrt(v[k] / bc2) + cfg_.epsilon);
    }
  }
}

}  // namespace gnne::nn
