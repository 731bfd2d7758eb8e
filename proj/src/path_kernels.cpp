#include "path_kernels.hpp"

#include <algorithm>

namespace gnne::detail {

void bfs_distances(const Graph& g, NodeId source, BfsWorkspace& ws, std::uint32_t max_depth) {
  ws.reset();
  ws.dist[source] = 0;
  ws.order.push_back(source);
  for (std::size_t head = 0; head < ws.order.size(); ++head) {
    const NodeId u = ws.order[head];
    const std::uint32_t du = ws.dist[u];
    if (du >= max_depth) continue;
    for (NodeId v : g.neighbors(u)) {
      if (ws.dist[v] == kUnreachable) {
        ws.dist[v] = du + 1;
        ws.order.push_back(v);
      }
    }
  }
}

double accumulate_source(const Graph& g, NodeId source, BfsWorkspace& ws, std::vector<double>& continuation,
                         std::vector<double>& through) {
  ws.reset();
  ws.dist[source] = 0;
  ws.sigma[source] = 1.0;
  ws.order.push_back(source);
  for (std::size_t head = 0; head < ws.order.size(); ++head) {
    const NodeId u = ws.order[head];
    for (NodeId v : g.neighbors(u)) {
      if (ws.dist[v] == kUnreachable) {
        ws.dist[v] = ws.dist[u] + 1;
        ws.order.push_back(v);
      }
      if (ws.dist[v] == ws.dist[u] + 1) ws.sigma[v] += ws.sigma[u];
    }
  }
  double total = 0.0;
  for (auto it = ws.order.rbegin(); it != ws.order.rend(); ++it) {
    const NodeId w = *it;
    if (w == source) continue;
    total += ws.sigma[w];
    // continuation[w] = number of shortest-path DAG paths from w to every farther target
    for (NodeId v : g.neighbors(w)) {
      if (ws.dist[v] + 1 == ws.dist[w]) continuation[v] += 1.0 + continuation[w];
    }
    through[w] += ws.sigma[w] * continuation[w];
  }
  for (NodeId v : ws.order) continuation[v] = 0.0;
  return total;
}

double path_count_totals(const Graph& g, std::vector<double>& through) {
  const std::size_t n = g.num_nodes();
  const std::size_t blocks = reduction_blocks(n);
  std::vector<std::vector<double>> partial(blocks);
  std::vector<double> partial_total(blocks, 0.0);
#pragma omp parallel
  {
    BfsWorkspace ws(n);
    std::vector<double> continuation(n, 0.0);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
      const std::size_t lo = n * static_cast<std::size_t>(b) / blocks;
      const std::size_t hi = n * static_cast<std::size_t>(b + 1) / blocks;
      std::vector<double> acc(n, 0.0);
      double total = 0.0;
      for (std::size_t s = lo; s < hi; ++s) total += accumulate_source(g, static_cast<NodeId>(s), ws, continuation, acc);
      partial[b] = std::move(acc);
      partial_total[b] = total;
    }
  }
  double total = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    total += partial_total[b];
    for (std::size_t v = 0; v < n; ++v) through[v] += partial[b][v];
  }
  return total;
}

std::vector<double> closeness_scores(const Graph& g, bool parallel) {
  const std::size_t n = g.num_nodes();
  std::vector<double> s(n, 0.0);
#pragma omp parallel if (parallel)
  {
    BfsWorkspace ws(n);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
      bfs_distances(g, static_cast<NodeId>(si), ws);
      double dsum = 0.0;
      for (NodeId v : ws.order) dsum += ws.dist[v];
      const double reach = static_cast<double>(ws.order.size());
      s[si] = dsum > 0.0 ? (reach - 1.0) / dsum : 0.0;
    }
  }
  return s;
}

std::vector<double> harmonic_scores(const Graph& g, bool parallel) {
  const std::size_t n = g.num_nodes();
  std::vector<double> s(n, 0.0);
  if (n < 2) return s;
#pragma omp parallel if (parallel)
  {
    BfsWorkspace ws(n);
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
      bfs_distances(g, static_cast<NodeId>(si), ws);
      double acc = 0.0;
      for (NodeId v : ws.order) {
        if (ws.dist[v] > 0) acc += 1.0 / ws.dist[v];
      }
      s[si] = acc / static_cast<double>(n - 1);
    }
  }
  return s;
}

double inverse_distance_sum(const Graph& g, bool parallel) {
  const std::size_t n = g.num_nodes();
  if (!parallel) {
    BfsWorkspace ws(n);
    double acc = 0.0;
    for (NodeId s = 0; s < n; ++s) {
      if (!g.is_active(s)) continue;
      bfs_distances(g, s, ws);
      for (NodeId v : ws.order) {
        if (ws.dist[v] > 0) acc += 1.0 / ws.dist[v];
      }
    }
    return acc;
  }
  const std::size_t blocks = reduction_blocks(n);
  std::vector<double> partial(blocks, 0.0);
#pragma omp parallel
  {
    BfsWorkspace ws(n);
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
      const std::size_t lo = n * static_cast<std::size_t>(b) / blocks;
      const std::size_t hi = n * static_cast<std::size_t>(b + 1) / blocks;
      double acc = 0.0;
      for (std::size_t s = lo; s < hi; ++s) {
        if (!g.is_active(static_cast<NodeId>(s))) continue;
        bfs_distances(g, static_cast<NodeId>(s), ws);
        for (NodeId v : ws.order) {
          if (ws.dist[v] > 0) acc += 1.0 / ws.dist[v];
        }
      }
      partial[b] = acc;
    }
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace gnne::detail
