#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gnne/graph.hpp"
#include "gnne/ranked_list.hpp"

namespace gnne {

struct SirConfig {
  double beta = 0.1;   // per-contact infection probability
  double gamma = 1.0;  // per-step recovery probability
  std::size_t max_steps = 100000;

  void validate() const;
};

struct SirCounts {
  std::size_t susceptible = 0;
  std::size_t infected = 0;
  std::size_t recovered = 0;
};

/// Trajectory of one run; steps[0] is the initial state.
struct SirOutcome {
  std::vector<SirCounts> steps;

  std::size_t final_size() const noexcept { return steps.back().infected + steps.back().recovered; }
};

/// <k> / (<k^2> - <k>) over all nodes. Throws ArgumentError when <k^2> <= <k>.
double epidemic_threshold(const Graph& g);

/// Synchronous discrete-time SIR. Every step each infected node tries each
/// susceptible neighbour with probability beta, then recovers with probability
/// gamma; nodes infected during a step become infectious on the next one.
SirOutcome sir_run(const Graph& g, std::span<const NodeId> seeds, const SirConfig& cfg, std::uint64_t seed);

/// Mean final outbreak size (I + R) over `runs` single-seed runs started from
/// every node, gamma = 1. Run r of node i uses derive_seed(base_seed, {r, i}).
std::vector<double> sir_node_scores(const Graph& g, double beta, std::size_t runs, std::uint64_t base_seed);

/// Mean F(t) = I(t) + R(t) over `runs` runs seeded with the top ceil(top_frac * n)
/// nodes of `ranking`. Shorter runs are padded with their terminal value.
std::vector<double> spreading_ability(const Graph& g, const RankedList& ranking, double top_frac, double beta,
                                      std::size_t runs, std::uint64_t base_seed);

std::size_t spreading_seed_count(std::size_t n, double top_frac);

/// Writes `t,F_mean` rows.
void write_spreading_csv(std::ostream& out, std::span<const double> curve);

namespace serial {

std::vector<double> sir_node_scores(const Graph& g, double beta, std::size_t runs, std::uint64_t base_seed);

}  // namespace serial

}  // namespace gnne
