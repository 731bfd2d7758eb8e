#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gnne/graph.hpp"
#include "gnne/ranked_list.hpp"

namespace gnne {

/// Metric values along a static-targeting attack: at ratio r the top
/// floor(r * n) nodes of one fixed ranking are removed.
struct AttackCurve {
  std::string method;
  std::vector<double> ratios;  // strictly increasing, within [0, 1]
  std::vector<double> values;
};

/// Attack grid 0, step, 2*step, ..., capped with a final point at 1.
std::vector<double> attack_grid(double step);
/// floor(r * n), tolerant of r = k / n rounding below k.
std::size_t removal_count(double ratio, std::size_t n);

/// Largest component size / original n after each removal step.
AttackCurve lcc_curve(const Graph& g, const RankedList& ranking, double step);
/// Node-by-node LCC curve (grid step 1/n).
AttackCurve lcc_curve_per_node(const Graph& g, const RankedList& ranking);

enum class EfficiencyBase {
  survivors,  // N' (N' - 1) over the surviving nodes
  original,   // N (N - 1) of the intact network
};

/// sum_{i != j} 1/d_ij / (N (N - 1)); unreachable pairs contribute 0.
double efficiency(const Graph& g, EfficiencyBase base = EfficiencyBase::survivors);

struct EfficiencyOptions {
  EfficiencyBase base = EfficiencyBase::survivors;
  /// Stop after the first grid point whose value is <= this (saves the tail).
  std::optional<double> stop_at;
};

AttackCurve efficiency_curve(const Graph& g, const RankedList& ranking, double step, EfficiencyOptions opts = {});
AttackCurve efficiency_curve_per_node(const Graph& g, const RankedList& ranking, EfficiencyOptions opts = {});

struct RemovalRatio {
  double ratio = 1.0;
  bool reached = false;
};

/// Smallest grid ratio with value <= threshold; {1.0, false} if never reached.
RemovalRatio removal_ratio_at(const AttackCurve& curve, double threshold);

/// Writes `r,value` rows.
void write_curve_csv(std::ostream& out, const AttackCurve& curve);
AttackCurve read_curve_csv(std::istream& in, const std::string& method);

struct MethodReport {
  std::string method;
  RemovalRatio lcc_ratio;         // at LCC <= lcc_threshold
  RemovalRatio efficiency_ratio;  // at mu <= efficiency_fraction * mu0
  double spreading_steady = 0.0;  // final F(t)
};

struct ComparisonConfig {
  double lcc_threshold = 0.01;
  double efficiency_fraction = 0.01;
  EfficiencyBase efficiency_base = EfficiencyBase::survivors;
  double figure_step = 0.02;
  double top_fraction = 0.05;
  std::optional<double> beta;  // epidemic threshold when unset
  std::size_t spreading_runs = 1000;
  std::uint64_t seed = 7;
};

struct ComparisonResult {
  std::vector<MethodReport> rows;
  std::vector<AttackCurve> lcc_curves;         // figure grid
  std::vector<AttackCurve> efficiency_curves;  // figure grid
  std::vector<std::vector<double>> spreading;  // F(t) per method
  double efficiency0 = 0.0;
};

struct NamedRanking {
  std::string method;
  RankedList ranking;
};

/// Attack tables (node granularity), figure curves and spreading curves for
/// every ranking, rows in input order.
ComparisonResult compare_methods(const Graph& g, const std::vector<NamedRanking>& rankings,
                                 const ComparisonConfig& cfg);

/// `method,lcc_ratio,lcc_reached,efficiency_ratio,efficiency_reached,F_steady`
void write_report_csv(std::ostream& out, const std::vector<MethodReport>& rows);

namespace serial {

double efficiency(const Graph& g, EfficiencyBase base = EfficiencyBase::survivors);

}  // namespace serial

}  // namespace gnne
