#include "gnne/ranked_list.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "gnne/error.hpp"

namespace gnne {

RankedList RankedList::from_scores(std::vector<double> scores) {
  RankedList r;
  r.order.resize(scores.size());
  std::iota(r.order.begin(), r.order.end(), NodeId{0});
  std::stable_sort(r.order.begin(), r.order.end(), [&](NodeId a, NodeId b) { return scores[a] > scores[b]; });
  r.scores = std::move(scores);
  return r;
}

std::vector<std::size_t> RankedList::ranks() const {
  std::vector<std::size_t> out(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) out[order[k]] = k + 1;
  return out;
}

void write_ranked_csv(std::ostream& out, const RankedList& ranking, const NodeMap& nodes) {
  out << "node_label,score,rank\n";
  char buf[32];
  for (std::size_t k = 0; k < ranking.order.size(); ++k) {
    const NodeId v = ranking.order[k];
    std::snprintf(buf, sizeof buf, "%.17g", ranking.scores[v]);
    out << nodes.label(v) << ',' << buf << ',' << (k + 1) << '\n';
  }
}

RankedList read_ranked_csv(std::istream& in, const NodeMap& nodes) {
  std::string line;
  std::size_t lineno = 0;
  std::vector<double> scores(nodes.size(), 0.0);
  std::vector<std::uint8_t> seen(nodes.size(), 0);
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("node_label", 0) == 0) continue;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) throw ParseError(lineno, "expected node_label,score,rank");
    const std::string label = line.substr(0, c1);
    if (!nodes.contains(label)) throw ParseError(lineno, "unknown node label '" + label + "'");
    const NodeId v = nodes.id(label);
    scores[v] = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
    seen[v] = 1;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) throw DataError("ranking does not cover every node");
  return RankedList::from_scores(std::move(scores));
}

}  // namespace gnne
