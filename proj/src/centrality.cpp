#include "gnne/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gnne/error.hpp"
#include "path_kernels.hpp"

namespace gnne {

using detail::BfsWorkspace;

RankedList degree_centrality(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n < 2) throw ArgumentError("degree_centrality: need at least two nodes");
  std::vector<double> s(n);
  for (NodeId v = 0; v < n; ++v) s[v] = static_cast<double>(g.degree(v)) / static_cast<double>(n - 1);
  return RankedList::from_scores(std::move(s));
}

std::vector<std::size_t> shell_indices(const Graph& g) {
  // Bucket-based peeling: nodes are processed in non-decreasing current degree.
  const std::size_t n = g.num_nodes();
  std::size_t max_deg = 0;
  std::vector<std::size_t> deg(n);
  for (NodeId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    max_deg = std::max(max_deg, deg[v]);
  }
  std::vector<std::size_t> bin(max_deg + 2, 0);
  for (std::size_t d : deg) ++bin[d];
  std::size_t start = 0;
  for (std::size_t d = 0; d <= max_deg; ++d) {
    const std::size_t count = bin[d];
    bin[d] = start;
    start += count;
  }
  std::vector<NodeId> vert(n);
  std::vector<std::size_t> pos(n);
  for (NodeId v = 0; v < n; ++v) {
    pos[v] = bin[deg[v]]++;
    vert[pos[v]] = v;
  }
  for (std::size_t d = max_deg; d > 0; --d) bin[d] = bin[d - 1];
  bin[0] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const NodeId v = vert[i];
    for (NodeId u : g.neighbors(v)) {
      if (deg[u] > deg[v]) {
        const std::size_t du = deg[u];
        const std::size_t pu = pos[u];
        const std::size_t pw = bin[du];
        const NodeId w = vert[pw];
        if (u != w) {
          pos[u] = pw;
          vert[pu] = w;
          pos[w] = pu;
          vert[pw] = u;
        }
        ++bin[du];
        --deg[u];
      }
    }
  }
  return deg;
}

RankedList k_shell(const Graph& g) {
  auto shells = shell_indices(g);
  std::vector<double> s(shells.begin(), shells.end());
  return RankedList::from_scores(std::move(s));
}

RankedList betweenness(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> through(n, 0.0);
  const double total = detail::path_count_totals(g, through);
  if (total > 0.0) {
    for (double& x : through) x /= total;
  }
  return RankedList::from_scores(std::move(through));
}

RankedList closeness(const Graph& g) { return RankedList::from_scores(detail::closeness_scores(g, true)); }

RankedList harmonic(const Graph& g) { return RankedList::from_scores(detail::harmonic_scores(g, true)); }

namespace serial {

RankedList betweenness(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<double> through(n, 0.0);
  std::vector<double> continuation(n, 0.0);
  BfsWorkspace ws(n);
  double total = 0.0;
  for (NodeId s = 0; s < n; ++s) total += detail::accumulate_source(g, s, ws, continuation, through);
  if (total > 0.0) {
    for (double& x : through) x /= total;
  }
  return RankedList::from_scores(std::move(through));
}

RankedList closeness(const Graph& g) { return RankedList::from_scores(detail::closeness_scores(g, false)); }

RankedList harmonic(const Graph& g) { return RankedList::from_scores(detail::harmonic_scores(g, false)); }

}  // namespace serial

EigenvectorResult eigenvector_centrality(const Graph& g, double tolerance, std::size_t max_iterations) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw ArgumentError("eigenvector_centrality: empty graph");
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  EigenvectorResult result;
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    for (NodeId i = 0; i < n; ++i) {
      double acc = x[i];
      for (NodeId j : g.neighbors(i)) acc += x[j];
      y[i] = acc;
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    double diff = 0.0;
    for (NodeId i = 0; i < n; ++i) {
      y[i] /= norm;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    result.iterations = it;
    if (diff < tolerance) {
      result.converged = true;
      break;
    }
  }
  double rayleigh = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    double ax = 0.0;
    for (NodeId j : g.neighbors(i)) ax += x[j];
    rayleigh += x[i] * ax;
  }
  result.eigenvalue = rayleigh;
  result.ranking = RankedList::from_scores(std::move(x));
  return result;
}

RankedList eigenvector(const Graph& g) { return eigenvector_centrality(g).ranking; }

RankedList collective_influence(const Graph& g, std::size_t radius) {
  if (radius < 1) throw ArgumentError("collective_influence: radius must be >= 1");
  const std::size_t n = g.num_nodes();
  std::vector<double> s(n, 0.0);
#pragma omp parallel
  {
    BfsWorkspace ws(n);
#pragma omp for schedule(dynamic, 32)
    for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
      const auto i = static_cast<NodeId>(si);
      const double ki = static_cast<double>(g.degree(i));
      if (ki <= 1.0) continue;
      detail::bfs_distances(g, i, ws, static_cast<std::uint32_t>(radius));
      double frontier = 0.0;
      for (NodeId v : ws.order) {
        if (ws.dist[v] == radius) frontier += static_cast<double>(g.degree(v)) - 1.0;
      }
      s[i] = (ki - 1.0) * frontier;
    }
  }
  return RankedList::from_scores(std::move(s));
}

std::vector<double> iks_entropy(const Graph& g) {
  const std::size_t n = g.num_nodes();
  const double total = 2.0 * static_cast<double>(g.num_edges());
  std::vector<double> e(n, 0.0);
  if (total == 0.0) return e;
  // Summed over sorted neighbour degrees so equal degree multisets give
  // bit-identical entropies.
  std::vector<std::size_t> degs;
  for (NodeId i = 0; i < n; ++i) {
    degs.clear();
    for (NodeId j : g.neighbors(i)) degs.push_back(g.degree(j));
    std::sort(degs.begin(), degs.end());
    double acc = 0.0;
    for (std::size_t k : degs) {
      const double p = static_cast<double>(k) / total;
      acc -= p * std::log(p);
    }
    e[i] = acc;
  }
  return e;
}

RankedList iks(const Graph& g) {
  const auto shells = shell_indices(g);
  auto entropy = iks_entropy(g);
  const double span = 1.0 + (entropy.empty() ? 0.0 : *std::max_element(entropy.begin(), entropy.end()));
  for (std::size_t i = 0; i < entropy.size(); ++i) entropy[i] += static_cast<double>(shells[i]) * span;
  return RankedList::from_scores(std::move(entropy));
}

RankedList gehc(const Graph& g, const Matrix& embedding) {
  const std::size_t n = g.num_nodes();
  if (embedding.rows() != n) {
    throw ArgumentError("gehc: embedding has " + std::to_string(embedding.rows()) + " rows for " + std::to_string(n) +
                        " nodes");
  }
  const auto shells = shell_indices(g);
  std::vector<double> w(n);
  for (NodeId v = 0; v < n; ++v) w[v] = static_cast<double>(g.degree(v)) * static_cast<double>(shells[v]);
  std::vector<double> s(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    auto ri = embedding.row(i);
    double acc = 0.0;
    for (NodeId j : g.neighbors(i)) {
      auto rj = embedding.row(j);
      double d2 = 0.0;
      for (std::size_t c = 0; c < ri.size(); ++c) d2 += (ri[c] - rj[c]) * (ri[c] - rj[c]);
      acc += w[i] * w[j] * std::exp(-d2);
    }
    s[i] = acc;
  }
  return RankedList::from_scores(std::move(s));
}

}  // namespace gnne
