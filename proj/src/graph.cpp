#include "gnne/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>

#include "gnne/error.hpp"
#include "gnne/matrix.hpp"
#include "gnne/rng.hpp"

namespace gnne {

Graph Graph::from_edges(std::size_t num_nodes, std::span<const Edge> edges) {
  std::vector<std::vector<NodeId>> adj(num_nodes);
  for (auto [u, v] : edges) {
    if (u >= num_nodes || v >= num_nodes) throw ArgumentError("edge endpoint out of range");
    if (u == v) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Graph g;
  g.offsets_.assign(num_nodes + 1, 0);
  for (std::size_t v = 0; v < num_nodes; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.targets_.reserve(g.offsets_.back());
  for (const auto& list : adj) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  g.num_edges_ = g.targets_.size() / 2;
  g.active_.assign(num_nodes, 1);
  g.num_active_ = num_nodes;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const noexcept {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<double> Graph::degrees() const {
  std::vector<double> d(num_nodes());
  for (NodeId v = 0; v < num_nodes(); ++v) d[v] = static_cast<double>(degree(v));
  return d;
}

NodeId NodeMap::intern(const std::string& label) {
  auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
  if (inserted) labels_.push_back(label);
  return it->second;
}

NodeMap NodeMap::identity(std::size_t n) {
  NodeMap map;
  for (std::size_t i = 0; i < n; ++i) map.intern(std::to_string(i));
  return map;
}

LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph out;
  std::vector<Edge> edges;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream tokens(line);
    std::string a, b;
    if (!(tokens >> a)) continue;
    if (a[0] == '#' || a[0] == '%') continue;
    if (!(tokens >> b)) throw ParseError(lineno, "expected two node labels, found one ('" + a + "')");
    const NodeId u = out.nodes.intern(a);
    const NodeId v = out.nodes.intern(b);
    edges.emplace_back(u, v);
  }
  out.graph = Graph::from_edges(out.nodes.size(), edges);
  if (out.graph.num_edges() == 0) throw DataError("edge list contains no edges");
  return out;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open edge list '" + path + "'");
  try {
    return load_edge_list(in);
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void save_edge_list(std::ostream& out, const Graph& g, const NodeMap& nodes) {
  for (auto [u, v] : g.edges()) out << nodes.label(u) << ' ' << nodes.label(v) << '\n';
}

Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed) {
  if (m < 1) throw ArgumentError("generate_ba: m must be >= 1");
  if (n <= m) throw ArgumentError("generate_ba: need n > m (got n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");

  std::vector<Edge> edges;
  edges.reserve(m * (m - 1) / 2 + m * (n - m));
  // Every edge endpoint appears once, so a uniform draw is degree-proportional.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * edges.capacity());
  auto add_edge = [&](NodeId u, NodeId v) {
    edges.emplace_back(u, v);
    endpoints.push_back(u);
    endpoints.push_back(v);
  };

  for (NodeId u = 0; u < m; ++u) {
    for (NodeId v = u + 1; v < m; ++v) add_edge(u, v);
  }
  for (NodeId u = 0; u < m; ++u) add_edge(static_cast<NodeId>(m), u);

  Rng rng(seed);
  std::vector<NodeId> chosen;
  chosen.reserve(m);
  for (std::size_t t = m + 1; t < n; ++t) {
    chosen.clear();
    while (chosen.size() < m) {
      const NodeId c = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(chosen.begin(), chosen.end(), c) == chosen.end()) chosen.push_back(c);
    }
    for (NodeId c : chosen) add_edge(static_cast<NodeId>(t), c);
  }
  return Graph::from_edges(n, edges);
}

Matrix laplacian(const Graph& g) {
  const std::size_t n = g.num_nodes();
  Matrix l(n, n);
  for (NodeId i = 0; i < n; ++i) {
    l(i, i) = static_cast<double>(g.degree(i));
    for (NodeId j : g.neighbors(i)) l(i, j) = -1.0;
  }
  return l;
}

BfsResult bfs_layers(const Graph& g, NodeId source) {
  const std::size_t n = g.num_nodes();
  if (source >= n) throw ArgumentError("bfs_layers: source out of range");
  BfsResult r;
  r.dist.assign(n, kUnreachable);
  r.sigma.assign(n, 0.0);
  r.predecessors.assign(n, {});
  r.order.reserve(n);
  r.dist[source] = 0;
  r.sigma[source] = 1.0;
  r.order.push_back(source);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const NodeId u = r.order[head];
    for (NodeId v : g.neighbors(u)) {
      if (r.dist[v] == kUnreachable) {
        r.dist[v] = r.dist[u] + 1;
        r.order.push_back(v);
      }
      if (r.dist[v] == r.dist[u] + 1) {
        r.sigma[v] += r.sigma[u];
        r.predecessors[v].push_back(u);
      }
    }
  }
  return r;
}

std::size_t largest_component_size(const Graph& g) {
  const std::size_t n = g.num_nodes();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<NodeId> stack;
  std::size_t best = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s] || !g.is_active(s)) continue;
    std::size_t size = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const NodeId u = stack.back();
      stack.pop_back();
      ++size;
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          stack.push_back(v);
        }
      }
    }
    best = std::max(best, size);
  }
  return best;
}

Graph remove_nodes(const Graph& g, std::span<const NodeId> victims) {
  const std::size_t n = g.num_nodes();
  std::vector<std::uint8_t> alive(g.active_);
  for (NodeId v : victims) {
    if (v >= n) throw ArgumentError("remove_nodes: node id out of range");
    alive[v] = 0;
  }
  Graph out;
  out.offsets_.assign(n + 1, 0);
  out.targets_.reserve(g.targets_.size());
  for (NodeId u = 0; u < n; ++u) {
    if (alive[u]) {
      for (NodeId v : g.neighbors(u)) {
        if (alive[v]) out.targets_.push_back(v);
      }
    }
    out.offsets_[u + 1] = out.targets_.size();
  }
  out.num_edges_ = out.targets_.size() / 2;
  out.active_ = std::move(alive);
  out.num_active_ = static_cast<std::size_t>(std::count(out.active_.begin(), out.active_.end(), std::uint8_t{1}));
  return out;
}

double degree_powerlaw_exponent(const Graph& g, std::size_t min_degree) {
  std::map<std::size_t, std::size_t> histogram;
  std::size_t total = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (g.degree(v) >= std::max<std::size_t>(min_degree, 1)) {
      ++histogram[g.degree(v)];
      ++total;
    }
  }
  if (histogram.size() < 2) throw ArgumentError("degree_powerlaw_exponent: need at least two distinct degrees");
  // CCDF P(K >= k), evaluated at each observed degree
  std::vector<double> xs, ys;
  std::size_t at_least = total;
  for (auto [k, count] : histogram) {
    xs.push_back(std::log(static_cast<double>(k)));
    ys.push_back(std::log(static_cast<double>(at_least) / static_cast<double>(total)));
    at_least -= count;
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return 1.0 - sxy / sxx;
}

}  // namespace gnne
