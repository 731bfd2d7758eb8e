#include "gnne/methods.hpp"

#include <algorithm>
#include <numeric>

#include "gnne/centrality.hpp"
#include "gnne/error.hpp"
#include "gnne/rng.hpp"

namespace gnne {

namespace {

enum Tag : std::uint64_t { kRandomTag = 0x52414e44, kGehcTag = 0x47454843 };

}  // namespace

bool is_method(std::string_view name) {
  return std::find(kMethodNames.begin(), kMethodNames.end(), name) != kMethodNames.end();
}

std::string method_list() {
  std::string out;
  for (auto name : kMethodNames) {
    if (!out.empty()) out += ", ";
    out += name;
  }
  return out;
}

bool needs_model(std::string_view name) { return name == "GAT" || name == "GCN" || name == "GNNE"; }

RankedList random_ranking(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.num_nodes();
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  std::vector<double> scores(n);
  for (std::size_t pos = 0; pos < n; ++pos) scores[order[pos]] = static_cast<double>(n - pos);
  return RankedList::from_scores(std::move(scores));
}

RankedList rank_method(std::string_view name, const Graph& g, MethodContext& ctx) {
  if (name == "HC") return harmonic(g);
  if (name == "DC") return degree_centrality(g);
  if (name == "CI") return collective_influence(g, ctx.ci_radius);
  if (name == "CC") return closeness(g);
  if (name == "EC") return eigenvector(g);
  if (name == "BC") return betweenness(g);
  if (name == "KSHELL") return k_shell(g);
  if (name == "IKS") return iks(g);
  if (name == "RANDOM") return random_ranking(g, derive_seed(ctx.seed, {kRandomTag}));
  if (name == "GEHC") {
    DeepWalkConfig walk = ctx.gehc_walk;
    walk.skip_gram.seed = derive_seed(ctx.seed, {kGehcTag});
    return gehc(g, deepwalk(g, walk).vectors);
  }
  if (name == "GNNE") {
    if (!ctx.gnne) throw ArgumentError("method GNNE needs a trained model checkpoint");
    return rank_gnne(g, *ctx.gnne);
  }
  if (name == "GAT" || name == "GCN") {
    if (!ctx.baselines) throw ArgumentError("method " + std::string(name) + " needs a trained baseline checkpoint");
    return name == "GAT" ? rank_gat_baseline(g, *ctx.baselines) : rank_gcn_baseline(g, *ctx.baselines);
  }
  throw ArgumentError("unknown method '" + std::string(name) + "'; valid methods: " + method_list());
}

}  // namespace gnne
