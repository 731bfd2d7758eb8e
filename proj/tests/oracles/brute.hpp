#pragma once

// Textbook, unoptimised reference formulas on dense adjacency matrices.

#include <cstdint>
#include <vector>

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;

inline constexpr int kInf = 1 << 28;

/// Floyd-Warshall hop distances; kInf when unreachable.
std::vector<std::vector<int>> distances(const Adjacency& a);

std::vector<double> degree_centrality(const Adjacency& a);
/// L_jk = (A^d)_jk at d = d_jk; L_jk(i) = L_ji L_ik when i lies on a geodesic.
std::vector<double> betweenness(const Adjacency& a);
std::vector<double> closeness(const Adjacency& a);
std::vector<double> harmonic(const Adjacency& a);
/// Dense symmetric eigensolve; unit norm, non-negative leading eigenvector.
std::vector<double> eigenvector(const Adjacency& a, double* eigenvalue = nullptr);
std::vector<double> collective_influence(const Adjacency& a, int radius);
/// Largest k whose k-core (repeated deletion of nodes with degree < k) keeps the node.
std::vector<int> shell_index(const Adjacency& a);
std::vector<double> iks_entropy(const Adjacency& a);
/// Node order: shell descending, entropy descending, id ascending.
std::vector<std::uint32_t> iks_order(const Adjacency& a);
/// Pairwise sum over the nodes with alive[i]; denominator over `population` nodes.
double efficiency(const Adjacency& a, const std::vector<bool>& alive, double population);
/// Largest component size among alive nodes, by depth-first search.
int largest_component(const Adjacency& a, const std::vector<bool>& alive);

/// Exact expected final epidemic size (I + R at absorption) of synchronous SIR
/// with recovery probability 1, starting from one infected node, by summing
/// over every transition of the Markov chain on (S, I) subsets.
double sir_expected_final_size(const Adjacency& a, int seed, double beta);

}  // namespace oracle
