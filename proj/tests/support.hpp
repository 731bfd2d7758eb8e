#pragma once

#include <vector>

#include "gnne/graph.hpp"
#include "oracles/brute.hpp"
#include "oracles/graph_enum.hpp"

namespace testing {

inline gnne::Graph make_graph(std::size_t n, std::vector<gnne::Edge> edges) {
  return gnne::Graph::from_edges(n, edges);
}

inline gnne::Graph path(std::size_t n) {
  std::vector<gnne::Edge> e;
  for (gnne::NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make_graph(n, e);
}

inline gnne::Graph cycle(std::size_t n) {
  std::vector<gnne::Edge> e;
  for (gnne::NodeId i = 0; i < n; ++i) e.emplace_back(i, static_cast<gnne::NodeId>((i + 1) % n));
  return make_graph(n, e);
}

inline gnne::Graph complete(std::size_t n) {
  std::vector<gnne::Edge> e;
  for (gnne::NodeId i = 0; i < n; ++i) {
    for (gnne::NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  }
  return make_graph(n, e);
}

/// Hub 0 with `leaves` leaves.
inline gnne::Graph star(std::size_t leaves) {
  std::vector<gnne::Edge> e;
  for (gnne::NodeId i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make_graph(leaves + 1, e);
}

inline gnne::Graph to_graph(const oracle::SmallGraph& g) { return gnne::Graph::from_edges(g.n, g.edges()); }

inline oracle::Adjacency adjacency(const gnne::Graph& g) {
  const std::size_t n = g.num_nodes();
  oracle::Adjacency a(n, std::vector<int>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

}  // namespace testing
