#pragma once

// All-pairs breadth-first kernels shared by the path-based centralities and
// network efficiency.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gnne/graph.hpp"

namespace gnne::detail {

/// Reduction blocks for source-parallel sums. Depends only on n so the
/// floating-point summation order is the same for any thread count.
inline std::size_t reduction_blocks(std::size_t n) { return n < 64 ? (n == 0 ? 1 : n) : 64; }

struct BfsWorkspace {
  explicit BfsWorkspace(std::size_t n) : dist(n, kUnreachable), sigma(n, 0.0) { order.reserve(n); }

  std::vector<std::uint32_t> dist;
  std::vector<double> sigma;
  std::vector<NodeId> order;

  void reset() {
    for (NodeId v : order) {
      dist[v] = kUnreachable;
      sigma[v] = 0.0;
    }
    order.clear();
  }
};

/// Fills ws.dist/ws.order from `source`, stopping at depth max_depth.
void bfs_distances(const Graph& g, NodeId source, BfsWorkspace& ws, std::uint32_t max_depth = kUnreachable);

/// One source of the pass-through path count. Adds sigma_sv * (paths continuing
/// from v to farther targets) into through[v] and returns sum_t sigma_st.
/// `continuation` must be zero on entry and is left zeroed.
double accumulate_source(const Graph& g, NodeId source, BfsWorkspace& ws, std::vector<double>& continuation,
                         std::vector<double>& through);

/// Parallel sum of accumulate_source over all sources; returns the total path count.
double path_count_totals(const Graph& g, std::vector<double>& through);

std::vector<double> closeness_scores(const Graph& g, bool parallel);
std::vector<double> harmonic_scores(const Graph& g, bool parallel);

/// sum over ordered active pairs of 1/d_ij.
double inverse_distance_sum(const Graph& g, bool parallel);

}  // namespace gnne::detail
