#include "graph_enum.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace oracle {

namespace {

using Colors = std::array<int, kMaxOrder>;

// Replaces keys by their rank among the distinct keys.
template <class Key>
int rerank(const SmallGraph& g, const std::array<Key, kMaxOrder>& keys, Colors& colors) {
  std::vector<Key> distinct(keys.begin(), keys.begin() + g.n);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (int v = 0; v < g.n; ++v) {
    colors[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) - distinct.begin());
  }
  return static_cast<int>(distinct.size());
}

// Colour refinement to the coarsest equitable partition.
void refine(const SmallGraph& g, Colors& colors) {
  int cells = 0;
  for (int v = 0; v < g.n; ++v) cells = std::max(cells, colors[v] + 1);
  while (true) {
    std::array<std::vector<int>, kMaxOrder> keys;
    for (int v = 0; v < g.n; ++v) {
      keys[v].push_back(colors[v]);
      std::vector<int> nb;
      for (int u = 0; u < g.n; ++u) {
        if (g.adjacent(v, u)) nb.push_back(colors[u]);
      }
      std::sort(nb.begin(), nb.end());
      keys[v].insert(keys[v].end(), nb.begin(), nb.end());
    }
    const int next = rerank(g, keys, colors);
    if (next == cells) return;
    cells = next;
  }
}

std::uint64_t code_for(const SmallGraph& g, const Colors& position) {
  std::uint64_t code = 0;
  int bit = 0;
  std::array<int, kMaxOrder> at{};
  for (int v = 0; v < g.n; ++v) at[position[v]] = v;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j, ++bit) {
      if (g.adjacent(at[i], at[j])) code |= std::uint64_t{1} << bit;
    }
  }
  return code;
}

std::uint64_t search(const SmallGraph& g, Colors colors) {
  refine(g, colors);
  // First smallest non-singleton cell.
  std::array<int, kMaxOrder> count{};
  for (int v = 0; v < g.n; ++v) ++count[colors[v]];
  int target = -1;
  for (int c = 0; c < g.n; ++c) {
    if (count[c] > 1 && (target < 0 || count[c] < count[target])) target = c;
  }
  if (target < 0) return code_for(g, colors);
  std::uint64_t best = ~std::uint64_t{0};
  for (int v = 0; v < g.n; ++v) {
    if (colors[v] != target) continue;
    std::array<int, kMaxOrder> keys{};
    for (int u = 0; u < g.n; ++u) keys[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
    Colors next{};
    rerank(g, keys, next);
    best = std::min(best, search(g, next));
  }
  return best;
}

}  // namespace

std::vector<std::pair<std::uint32_t, std::uint32_t>> SmallGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

std::uint64_t canonical_code(const SmallGraph& g) {
  Colors colors{};
  return (static_cast<std::uint64_t>(g.n) << 56) | search(g, colors);
}

std::vector<SmallGraph> connected_graphs(int n) {
  if (n < 1 || n > kMaxOrder) throw std::invalid_argument("connected_graphs: 1 <= n <= 8");
  static std::map<int, std::vector<SmallGraph>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  std::vector<SmallGraph> out;
  if (n == 1) {
    SmallGraph g;
    g.n = 1;
    out.push_back(g);
  } else {
    std::unordered_set<std::uint64_t> seen;
    for (const SmallGraph& base : connected_graphs(n - 1)) {
      for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
        SmallGraph g = base;
        g.n = n;
        for (int u = 0; u < n - 1; ++u) {
          if ((mask >> u) & 1u) g.connect(n - 1, u);
        }
        if (seen.insert(canonical_code(g)).second) out.push_back(g);
      }
    }
  }
  cache[n] = out;
  return out;
}

}  // namespace oracle
