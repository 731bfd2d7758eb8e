#pragma once

#include <algorithm>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "gnne/graph.hpp"

namespace gnne {

/// Per-node scores plus the node order they induce: descending score, ties
/// broken by ascending node id.
struct RankedList {
  std::vector<double> scores;
  std::vector<NodeId> order;

  static RankedList from_scores(std::vector<double> scores);

  std::size_t size() const noexcept { return scores.size(); }
  std::span<const NodeId> top(std::size_t k) const { return std::span<const NodeId>(order).first(std::min(k, order.size())); }
  /// 1-based rank of every node.
  std::vector<std::size_t> ranks() const;
};

/// Writes `node_label,score,rank` rows in rank order.
void write_ranked_csv(std::ostream& out, const RankedList& ranking, const NodeMap& nodes);
/// Reads the format written by write_ranked_csv; labels must exist in `nodes`.
RankedList read_ranked_csv(std::istream& in, const NodeMap& nodes);

}  // namespace gnne
