#pragma once

// Exhaustive enumeration of small connected graphs up to isomorphism.

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr int kMaxOrder = 8;

/// Adjacency bit rows; row[i] bit j set iff i ~ j.
struct SmallGraph {
  int n = 0;
  std::array<std::uint8_t, kMaxOrder> row{};

  bool adjacent(int i, int j) const { return (row[i] >> j) & 1u; }
  void connect(int i, int j) {
    row[i] |= static_cast<std::uint8_t>(1u << j);
    row[j] |= static_cast<std::uint8_t>(1u << i);
  }
  int degree(int i) const { return __builtin_popcount(row[i]); }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
};

/// Canonical form by individualisation-refinement: equal iff isomorphic.
std::uint64_t canonical_code(const SmallGraph& g);

/// One representative per isomorphism class of connected graphs on n nodes,
/// 1 <= n <= 8. Built by attaching a new vertex to every non-empty subset of
/// each (n-1)-vertex representative; every connected graph has a non-cut vertex.
std::vector<SmallGraph> connected_graphs(int n);

}  // namespace oracle
