#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gnne/graph.hpp"
#include "gnne/matrix.hpp"

namespace gnne {

struct WalkCorpus {
  std::vector<std::vector<NodeId>> walks;
  std::size_t walk_length = 0;
  std::size_t walks_per_node = 0;
};

/// Uniform random walks (DeepWalk, equivalently node2vec with p = q = 1).
/// Each pass visits every node once in a freshly shuffled order; a walk stops
/// early at a node without neighbours.
WalkCorpus random_walks(const Graph& g, std::size_t walks_per_node, std::size_t walk_length, std::uint64_t seed);

struct SkipGramConfig {
  std::size_t dimensions = 64;
  std::size_t window = 5;
  std::size_t negatives = 5;
  std::size_t epochs = 5;
  double learning_rate = 0.025;  // decays linearly towards lr * 1e-4
  std::uint64_t seed = 1;
};

struct EmbeddingTable {
  Matrix vectors;                  // n x d
  std::vector<double> epoch_loss;  // mean SGNS loss per epoch
};

/// Skip-gram with negative sampling; negatives drawn with probability
/// proportional to degree^0.75. Single-threaded.
EmbeddingTable train_skip_gram(const WalkCorpus& corpus, const Graph& g, const SkipGramConfig& cfg);

struct DeepWalkConfig {
  std::size_t walks_per_node = 10;
  std::size_t walk_length = 80;
  SkipGramConfig skip_gram;
};

EmbeddingTable deepwalk(const Graph& g, const DeepWalkConfig& cfg);

/// `node_label,v0,...,v{d-1}` rows.
void write_embedding_csv(std::ostream& out, const Matrix& vectors, const NodeMap& nodes);

}  // namespace gnne
