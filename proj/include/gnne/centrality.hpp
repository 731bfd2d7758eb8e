#pragma once

#include <cstddef>

#include "gnne/graph.hpp"
#include "gnne/matrix.hpp"
#include "gnne/ranked_list.hpp"

namespace gnne {

/// k_i / (n - 1). Throws ArgumentError for n < 2.
RankedList degree_centrality(const Graph& g);

/// Shell index from iterative peeling; isolated nodes sit in shell 0.
RankedList k_shell(const Graph& g);
std::vector<std::size_t> shell_indices(const Graph& g);

/// Pass-through shortest-path count of every node divided by the total number
/// of shortest paths, both over ordered pairs:
///   BC_i = sum_{j != k != i} L_jk(i) / sum_{j != k} L_jk
/// Parallel over sources with a reduction order fixed by n alone.
RankedList betweenness(const Graph& g);

/// (n_reach - 1) / sum of distances to reachable nodes; isolated nodes score 0.
RankedList closeness(const Graph& g);

/// sum_{j != i} 1/d_ij / (n - 1); unreachable pairs contribute 0.
RankedList harmonic(const Graph& g);

struct EigenvectorResult {
  RankedList ranking;
  double eigenvalue = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Principal eigenvector of A by power iteration on A + I (the shift keeps
/// bipartite graphs from oscillating). Unit L2 norm, non-negative.
EigenvectorResult eigenvector_centrality(const Graph& g, double tolerance = 1e-12, std::size_t max_iterations = 100000);
RankedList eigenvector(const Graph& g);

/// CI_l(i) = (k_i - 1) * sum over nodes at exactly hop distance l of (k_j - 1).
RankedList collective_influence(const Graph& g, std::size_t radius = 2);

/// Neighbour-degree entropy e_i = -sum_{j in N(i)} I_j ln I_j with I_j = k_j / sum_v k_v.
std::vector<double> iks_entropy(const Graph& g);
/// Shell first, entropy within the shell. score = shell * span + entropy where
/// span exceeds the largest entropy, so the composite sorts lexicographically.
RankedList iks(const Graph& g);

/// sum_{j in N(i)} w_i w_j exp(-|r_i - r_j|^2) with w = degree * shell index.
RankedList gehc(const Graph& g, const Matrix& embedding);

namespace serial {

// Single-threaded references for the parallel kernels above; same formulas,
// sources visited in ascending order and summed left to right.
RankedList betweenness(const Graph& g);
RankedList closeness(const Graph& g);
RankedList harmonic(const Graph& g);

}  // namespace serial

}  // namespace gnne
