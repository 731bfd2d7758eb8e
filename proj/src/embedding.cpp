#include "gnne/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "gnne/error.hpp"
#include "gnne/rng.hpp"

namespace gnne {

WalkCorpus random_walks(const Graph& g, std::size_t walks_per_node, std::size_t walk_length, std::uint64_t seed) {
  if (walk_length < 2) throw ArgumentError("random_walks: walk_length must be >= 2");
  if (g.num_edges() == 0) throw ArgumentError("random_walks: graph has no edges");
  const std::size_t n = g.num_nodes();
  WalkCorpus corpus;
  corpus.walk_length = walk_length;
  corpus.walks_per_node = walks_per_node;
  corpus.walks.resize(walks_per_node * n);

  std::vector<NodeId> starts(n);
  for (std::size_t pass = 0; pass < walks_per_node; ++pass) {
    std::iota(starts.begin(), starts.end(), NodeId{0});
    Rng shuffle_rng(derive_seed(seed, {pass}));
    for (std::size_t i = n; i > 1; --i) std::swap(starts[i - 1], starts[uniform_below(shuffle_rng, i)]);

#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(n); ++k) {
      const NodeId start = starts[k];
      Rng rng(derive_seed(seed, {pass, start, 1}));
      auto& walk = corpus.walks[pass * n + k];
      walk.reserve(walk_length);
      walk.push_back(start);
      while (walk.size() < walk_length) {
        auto nb = g.neighbors(walk.back());
        if (nb.empty()) break;
        walk.push_back(nb[uniform_below(rng, nb.size())]);
      }
    }
  }
  return corpus;
}

namespace {

double sigmoid(double x) {
  if (x > 30.0) return 1.0;
  if (x < -30.0) return 0.0;
  return 1.0 / (1.0 + std::exp(-x));
}

/// Alias-free sampler: cumulative weights + binary search.
class NegativeSampler {
 public:
  explicit NegativeSampler(const Graph& g) : cumulative_(g.num_nodes()) {
    double acc = 0.0;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      acc += std::pow(static_cast<double>(g.degree(v)), 0.75);
      cumulative_[v] = acc;
    }
  }

  NodeId draw(Rng& rng) const {
    const double x = uniform01(rng) * cumulative_.back();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), x);
    return static_cast<NodeId>(std::min<std::size_t>(it - cumulative_.begin(), cumulative_.size() - 1));
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace

EmbeddingTable train_skip_gram(const WalkCorpus& corpus, const Graph& g, const SkipGramConfig& cfg) {
  if (cfg.dimensions < 2) throw ArgumentError("train_skip_gram: dimensions must be >= 2");
  const std::size_t n = g.num_nodes();
  const std::size_t d = cfg.dimensions;
  Rng rng(cfg.seed);

  EmbeddingTable table;
  table.vectors = Matrix(n, d);
  Matrix context(n, d);
  for (double& x : table.vectors.data()) x = (uniform01(rng) - 0.5) / static_cast<double>(d);

  const NegativeSampler sampler(g);
  std::size_t tokens = 0;
  for (const auto& w : corpus.walks) tokens += w.size();
  const double total_steps = static_cast<double>(std::max<std::size_t>(1, tokens * cfg.epochs));
  std::size_t step = 0;
  std::vector<double> grad_in(d);

  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    double loss = 0.0;
    std::size_t pairs = 0;
    for (const auto& walk : corpus.walks) {
      for (std::size_t pos = 0; pos < walk.size(); ++pos, ++step) {
        const double lr = cfg.learning_rate * std::max(1e-4, 1.0 - static_cast<double>(step) / total_steps);
        const std::size_t lo = pos >= cfg.window ? pos - cfg.window : 0;
        const std::size_t hi = std::min(walk.size(), pos + cfg.window + 1);
        auto center = table.vectors.row(walk[pos]);
        for (std::size_t c = lo; c < hi; ++c) {
          if (c == pos) continue;
          std::fill(grad_in.begin(), grad_in.end(), 0.0);
          for (std::size_t s = 0; s <= cfg.negatives; ++s) {
            const bool positive = s == 0;
            const NodeId target = positive ? walk[c] : sampler.draw(rng);
            if (!positive && target == walk[c]) continue;
            auto out = context.row(target);
            double dot = 0.0;
            for (std::size_t k = 0; k < d; ++k) dot += center[k] * out[k];
            const double p = sigmoid(dot);
            loss -= std::log(std::max(positive ? p : 1.0 - p, 1e-12));
            const double coeff = lr * ((positive ? 1.0 : 0.0) - p);
            for (std::size_t k = 0; k < d; ++k) {
              grad_in[k] += coeff * out[k];
              out[k] += coeff * center[k];
            }
          }
          for (std::size_t k = 0; k < d; ++k) center[k] += grad_in[k];
          ++pairs;
        }
      }
    }
    table.epoch_loss.push_back(pairs ? loss / static_cast<double>(pairs) : 0.0);
  }
  if (!table.vectors.all_finite()) throw NumericError("train_skip_gram: non-finite embedding");
  return table;
}

EmbeddingTable deepwalk(const Graph& g, const DeepWalkConfig& cfg) {
  const auto corpus = random_walks(g, cfg.walks_per_node, cfg.walk_length, cfg.skip_gram.seed);
  return train_skip_gram(corpus, g, cfg.skip_gram);
}

void write_embedding_csv(std::ostream& out, const Matrix& vectors, const NodeMap& nodes) {
  out << "node_label";
  for (std::size_t k = 0; k < vectors.cols(); ++k) out << ",v" << k;
  out << '\n';
  char buf[32];
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    out << nodes.label(static_cast<NodeId>(i));
    for (double x : vectors.row(i)) {
      std::snprintf(buf, sizeof buf, "%.17g", x);
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace gnne
