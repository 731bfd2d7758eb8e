#include "gnne/sir.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "gnne/error.hpp"
#include "gnne/rng.hpp"

namespace gnne {

namespace {

enum class State : std::uint8_t { susceptible, infected, recovered };

/// Reusable per-thread buffers for repeated runs on one graph.
class SirEngine {
 public:
  explicit SirEngine(const Graph& g) : g_(g), state_(g.num_nodes(), State::susceptible) {}

  /// Runs to extinction (or max_steps); calls on_step(counts) for t = 0, 1, ...
  template <class OnStep>
  void run(std::span<const NodeId> seeds, const SirConfig& cfg, Rng& rng, OnStep&& on_step) {
    std::fill(state_.begin(), state_.end(), State::susceptible);
    infected_.clear();
    for (NodeId s : seeds) {
      if (state_[s] == State::susceptible) {
        state_[s] = State::infected;
        infected_.push_back(s);
      }
    }
    SirCounts counts{g_.num_nodes() - infected_.size(), infected_.size(), 0};
    on_step(counts);
    for (std::size_t t = 0; t < cfg.max_steps && !infected_.empty(); ++t) {
      next_.clear();
      for (NodeId u : infected_) {
        for (NodeId v : g_.neighbors(u)) {
          if (state_[v] == State::susceptible && uniform01(rng) < cfg.beta) {
            state_[v] = State::infected;
            next_.push_back(v);
          }
        }
      }
      // recovery of the nodes that were infectious during this step
      std::size_t still = 0;
      for (NodeId u : infected_) {
        if (cfg.gamma >= 1.0 || uniform01(rng) < cfg.gamma) {
          state_[u] = State::recovered;
          ++counts.recovered;
        } else {
          infected_[still++] = u;
        }
      }
      infected_.resize(still);
      infected_.insert(infected_.end(), next_.begin(), next_.end());
      counts.susceptible -= next_.size();
      counts.infected = infected_.size();
      on_step(counts);
    }
  }

 private:
  const Graph& g_;
  std::vector<State> state_;
  std::vector<NodeId> infected_;
  std::vector<NodeId> next_;
};

double single_seed_mean(SirEngine& engine, NodeId node, const SirConfig& cfg, std::size_t runs,
                        std::uint64_t base_seed) {
  double acc = 0.0;
  for (std::size_t r = 0; r < runs; ++r) {
    Rng rng(derive_seed(base_seed, {r, node}));
    SirCounts last;
    const NodeId seed[] = {node};
    engine.run(seed, cfg, rng, [&](const SirCounts& c) { last = c; });
    acc += static_cast<double>(last.infected + last.recovered);
  }
  return acc / static_cast<double>(runs);
}

SirConfig label_config(double beta) {
  SirConfig cfg;
  cfg.beta = beta;
  cfg.gamma = 1.0;
  cfg.validate();
  return cfg;
}

}  // namespace

void SirConfig::validate() const {
  if (!(beta >= 0.0 && beta <= 1.0)) throw ArgumentError("SIR beta must lie in [0, 1]");
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ArgumentError("SIR gamma must lie in [0, 1]");
}

double epidemic_threshold(const Graph& g) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw ArgumentError("epidemic_threshold: empty graph");
  double k1 = 0.0, k2 = 0.0;
  for (NodeId v = 0; v < n; ++v) {
    const double k = static_cast<double>(g.degree(v));
    k1 += k;
    k2 += k * k;
  }
  k1 /= static_cast<double>(n);
  k2 /= static_cast<double>(n);
  if (k2 <= k1) throw ArgumentError("epidemic_threshold: degenerate degree moments (<k^2> <= <k>)");
  return k1 / (k2 - k1);
}

SirOutcome sir_run(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  if (seeds.empty()) throw ArgumentError("sir_run: empty seed set");
  for (NodeId s : seeds) {
    if (s >= g.num_nodes()) throw ArgumentError("sir_run: seed node out of range");
  }
  SirEngine engine(g);
  Rng rng(seed);
  SirOutcome out;
  engine.run(seeds, cfg, rng, [&](const SirCounts& c) { out.steps.push_back(c); });
  return out;
}

std::vector<double> sir_node_scores(const Graph& g, double beta, std::size_t runs, std::uint64_t base_seed) {
  if (runs < 1) throw ArgumentError("sir_node_scores: runs must be >= 1");
  const SirConfig cfg = label_config(beta);
  const std::size_t n = g.num_nodes();
  std::vector<double> scores(n, 0.0);
#pragma omp parallel
  {
    SirEngine engine(g);
#pragma omp for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
      scores[i] = single_seed_mean(engine, static_cast<NodeId>(i), cfg, runs, base_seed);
    }
  }
  return scores;
}

namespace serial {

std::vector<double> sir_node_scores(const Graph& g, double beta, std::size_t runs, std::uint64_t base_seed) {
  if (runs < 1) throw ArgumentError("sir_node_scores: runs must be >= 1");
  const SirConfig cfg = label_config(beta);
  SirEngine engine(g);
  std::vector<double> scores(g.num_nodes(), 0.0);
  for (NodeId i = 0; i < g.num_nodes(); ++i) scores[i] = single_seed_mean(engine, i, cfg, runs, base_seed);
  return scores;
}

}  // namespace serial

std::size_t spreading_seed_count(std::size_t n, double top_frac) {
  // ceil with a guard against 0.05 * 100 evaluating to 5.000000000000001
  const double x = top_frac * static_cast<double>(n);
  const double r = std::round(x);
  const auto k = static_cast<std::size_t>(std::abs(x - r) < 1e-9 ? r : std::ceil(x));
  return std::max<std::size_t>(1, std::min(k, n));
}

std::vector<double> spreading_ability(const Graph& g, const RankedList& ranking, double top_frac, double beta,
                                      std::size_t runs, std::uint64_t base_seed) {
  if (!(top_frac > 0.0 && top_frac < 1.0)) throw ArgumentError("spreading_ability: top_frac must lie in (0, 1)");
  if (runs < 1) throw ArgumentError("spreading_ability: runs must be >= 1");
  if (ranking.size() != g.num_nodes()) throw ArgumentError("spreading_ability: ranking size does not match graph");
  const SirConfig cfg = label_config(beta);
  const auto seeds = ranking.top(spreading_seed_count(g.num_nodes(), top_frac));

  std::vector<std::vector<double>> per_run(runs);
#pragma omp parallel
  {
    SirEngine engine(g);
#pragma omp for schedule(dynamic, 4)
    for (std::ptrdiff_t r = 0; r < static_cast<std::ptrdiff_t>(runs); ++r) {
      Rng rng(derive_seed(base_seed, {static_cast<std::uint64_t>(r)}));
      auto& curve = per_run[r];
      engine.run(seeds, cfg, rng,
                 [&](const SirCounts& c) { curve.push_back(static_cast<double>(c.infected + c.recovered)); });
    }
  }
  std::size_t length = 0;
  for (const auto& c : per_run) length = std::max(length, c.size());
  std::vector<double> mean(length, 0.0);
  for (const auto& c : per_run) {
    for (std::size_t t = 0; t < length; ++t) mean[t] += t < c.size() ? c[t] : c.back();
  }
  for (double& x : mean) x /= static_cast<double>(runs);
  return mean;
}

void write_spreading_csv(std::ostream& out, std::span<const double> curve) {
  out << "t,F_mean\n";
  char buf[32];
  for (std::size_t t = 0; t < curve.size(); ++t) {
    std::snprintf(buf, sizeof buf, "%.17g", curve[t]);
    out << t << ',' << buf << '\n';
  }
}

}  // namespace gnne
