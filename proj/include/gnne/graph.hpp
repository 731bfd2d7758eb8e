#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gnne {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

class Matrix;

/// Undirected, unweighted, simple graph over dense ids 0..n-1 stored as sorted
/// adjacency lists (CSR). Immutable after construction.
///
/// Nodes can be marked inactive by remove_nodes(); an inactive node keeps its id
/// but has no edges and is excluded from component and efficiency computations.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list; self-loops are dropped and duplicates collapsed.
  static Graph from_edges(std::size_t num_nodes, std::span<const Edge> edges);

  std::size_t num_nodes() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const noexcept { return num_edges_; }
  std::size_t num_active() const noexcept { return num_active_; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool is_active(NodeId v) const noexcept { return active_[v] != 0; }
  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Each undirected edge once, as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;
  std::vector<double> degrees() const;

  friend Graph remove_nodes(const Graph& g, std::span<const NodeId> victims);

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> targets_;
  std::vector<std::uint8_t> active_;
  std::size_t num_edges_ = 0;
  std::size_t num_active_ = 0;
};

/// External label <-> internal id bijection; ids are assigned in first-appearance order.
class NodeMap {
 public:
  NodeId intern(const std::string& label);
  const std::string& label(NodeId id) const { return labels_.at(id); }
  bool contains(const std::string& label) const { return ids_.count(label) != 0; }
  NodeId id(const std::string& label) const { return ids_.at(label); }
  std::size_t size() const noexcept { return labels_.size(); }

  /// Identity mapping "0".."n-1" for generated graphs.
  static NodeMap identity(std::size_t n);

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> ids_;
};

struct LoadedGraph {
  Graph graph;
  NodeMap nodes;
};

/// Parses a whitespace-separated edge list; '#' and '%' start comment lines,
/// tokens after the second on a line are ignored. Throws ParseError on a line
/// with a single token and DataError when no edge remains.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

void save_edge_list(std::ostream& out, const Graph& g, const NodeMap& nodes);

/// Barabasi-Albert preferential attachment. Starts from a complete graph on m
/// nodes; every later node attaches to m distinct existing nodes drawn with
/// probability proportional to degree. Produces C(m,2) + m(n-m) edges.
Graph generate_ba(std::size_t n, std::size_t m, std::uint64_t seed);

/// Dense L = D - A.
Matrix laplacian(const Graph& g);

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

struct BfsResult {
  std::vector<std::uint32_t> dist;             // kUnreachable when not reached
  std::vector<double> sigma;                   // shortest-path counts from the source
  std::vector<std::vector<NodeId>> predecessors;
  std::vector<NodeId> order;                   // visit order, non-decreasing distance
};

BfsResult bfs_layers(const Graph& g, NodeId source);

/// Size of the largest connected component among active nodes; 0 if none.
std::size_t largest_component_size(const Graph& g);

/// Induced subgraph on the survivors; removed nodes keep their ids but become
/// inactive and isolated.
Graph remove_nodes(const Graph& g, std::span<const NodeId> victims);

/// Exponent gamma of P(k) ~ k^-gamma estimated from a least-squares fit of the
/// log-log degree CCDF over degrees >= min_degree (gamma = 1 - slope).
double degree_powerlaw_exponent(const Graph& g, std::size_t min_degree = 1);

}  // namespace gnne
