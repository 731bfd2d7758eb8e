#include "gnne/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>

#include "gnne/error.hpp"
#include "gnne/sir.hpp"
#include "path_kernels.hpp"

namespace gnne {

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void check_ranking(const Graph& g, const RankedList& ranking) {
  if (ranking.order.size() != g.num_nodes()) throw ArgumentError("ranking size does not match the graph");
}

/// LCC size after removing the top k nodes, for every k = 0..n, by adding the
/// nodes back in reverse rank order with a union-find.
std::vector<std::size_t> lcc_sizes_per_removal(const Graph& g, const RankedList& ranking) {
  const std::size_t n = g.num_nodes();
  std::vector<NodeId> parent(n);
  std::vector<std::size_t> size(n, 1);
  std::vector<std::uint8_t> present(n, 0);
  std::iota(parent.begin(), parent.end(), NodeId{0});
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::vector<std::size_t> out(n + 1, 0);
  std::size_t best = 0;
  for (std::size_t k = n; k-- > 0;) {
    const NodeId v = ranking.order[k];
    if (g.is_active(v)) {
      present[v] = 1;
      best = std::max<std::size_t>(best, 1);
      for (NodeId u : g.neighbors(v)) {
        if (!present[u]) continue;
        NodeId a = find(u), b = find(v);
        if (a == b) continue;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
        best = std::max(best, size[a]);
      }
    }
    out[k] = best;
  }
  return out;
}

double efficiency_impl(const Graph& g, EfficiencyBase base, bool parallel) {
  const double count = static_cast<double>(base == EfficiencyBase::survivors ? g.num_active() : g.num_nodes());
  if (count < 2.0) return 0.0;
  return detail::inverse_distance_sum(g, parallel) / (count * (count - 1.0));
}

AttackCurve efficiency_over(const Graph& g, const RankedList& ranking, const std::vector<double>& ratios,
                            const EfficiencyOptions& opts) {
  check_ranking(g, ranking);
  const std::size_t n = g.num_nodes();
  AttackCurve curve;
  for (double r : ratios) {
    const std::size_t k = removal_count(r, n);
    const Graph survivors = remove_nodes(g, std::span<const NodeId>(ranking.order).first(k));
    const double mu = efficiency(survivors, opts.base);
    curve.ratios.push_back(r);
    curve.values.push_back(mu);
    if (opts.stop_at && mu <= *opts.stop_at) break;
  }
  return curve;
}

std::vector<double> per_node_ratios(std::size_t n) {
  std::vector<double> r(n + 1);
  for (std::size_t k = 0; k <= n; ++k) r[k] = n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n);
  return r;
}

}  // namespace

std::vector<double> attack_grid(double step) {
  if (!(step > 0.0 && step <= 0.5)) throw ArgumentError("attack step must lie in (0, 0.5]");
  std::vector<double> grid;
  for (std::size_t k = 0;; ++k) {
    const double r = static_cast<double>(k) * step;
    if (r >= 1.0 - 1e-12) break;
    grid.push_back(r);
  }
  grid.push_back(1.0);
  return grid;
}

std::size_t removal_count(double ratio, std::size_t n) {
  const double x = std::floor(ratio * static_cast<double>(n) + 1e-9);
  return std::min<std::size_t>(n, x <= 0.0 ? 0 : static_cast<std::size_t>(x));
}

AttackCurve lcc_curve(const Graph& g, const RankedList& ranking, double step) {
  check_ranking(g, ranking);
  const std::size_t n = g.num_nodes();
  const auto sizes = lcc_sizes_per_removal(g, ranking);
  AttackCurve curve;
  for (double r : attack_grid(step)) {
    curve.ratios.push_back(r);
    curve.values.push_back(n ? static_cast<double>(sizes[removal_count(r, n)]) / static_cast<double>(n) : 0.0);
  }
  return curve;
}

AttackCurve lcc_curve_per_node(const Graph& g, const RankedList& ranking) {
  check_ranking(g, ranking);
  const std::size_t n = g.num_nodes();
  const auto sizes = lcc_sizes_per_removal(g, ranking);
  AttackCurve curve;
  curve.ratios = per_node_ratios(n);
  for (std::size_t k = 0; k <= n; ++k) curve.values.push_back(n ? static_cast<double>(sizes[k]) / static_cast<double>(n) : 0.0);
  return curve;
}

double efficiency(const Graph& g, EfficiencyBase base) { return efficiency_impl(g, base, true); }

namespace serial {

double efficiency(const Graph& g, EfficiencyBase base) { return efficiency_impl(g, base, false); }

}  // namespace serial

AttackCurve efficiency_curve(const Graph& g, const RankedList& ranking, double step, EfficiencyOptions opts) {
  return efficiency_over(g, ranking, attack_grid(step), opts);
}

AttackCurve efficiency_curve_per_node(const Graph& g, const RankedList& ranking, EfficiencyOptions opts) {
  return efficiency_over(g, ranking, per_node_ratios(g.num_nodes()), opts);
}

RemovalRatio removal_ratio_at(const AttackCurve& curve, double threshold) {
  for (std::size_t i = 0; i < curve.values.size(); ++i) {
    if (curve.values[i] <= threshold) return {curve.ratios[i], true};
  }
  return {1.0, false};
}

void write_curve_csv(std::ostream& out, const AttackCurve& curve) {
  out << "r,value\n";
  for (std::size_t i = 0; i < curve.ratios.size(); ++i) {
    out << format_double(curve.ratios[i]) << ',' << format_double(curve.values[i]) << '\n';
  }
}

AttackCurve read_curve_csv(std::istream& in, const std::string& method) {
  AttackCurve curve;
  curve.method = method;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("r,", 0) == 0) continue;
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError(lineno, "expected r,value");
    curve.ratios.push_back(std::stod(line.substr(0, comma)));
    curve.values.push_back(std::stod(line.substr(comma + 1)));
  }
  return curve;
}

ComparisonResult compare_methods(const Graph& g, const std::vector<NamedRanking>& rankings,
                                 const ComparisonConfig& cfg) {
  ComparisonResult result;
  result.efficiency0 = efficiency(g, cfg.efficiency_base);
  const double beta = cfg.beta ? *cfg.beta : epidemic_threshold(g);
  const double mu_threshold = cfg.efficiency_fraction * result.efficiency0;
  for (const auto& [method, ranking] : rankings) {
    MethodReport row;
    row.method = method;
    row.lcc_ratio = removal_ratio_at(lcc_curve_per_node(g, ranking), cfg.lcc_threshold);
    const auto eff_table = efficiency_curve_per_node(g, ranking, {cfg.efficiency_base, mu_threshold});
    row.efficiency_ratio = removal_ratio_at(eff_table, mu_threshold);

    auto lcc_fig = lcc_curve(g, ranking, cfg.figure_step);
    lcc_fig.method = method;
    auto eff_fig = efficiency_curve(g, ranking, cfg.figure_step, {cfg.efficiency_base, std::nullopt});
    eff_fig.method = method;
    auto spread = spreading_ability(g, ranking, cfg.top_fraction, beta, cfg.spreading_runs, cfg.seed);
    row.spreading_steady = spread.back();

    result.rows.push_back(row);
    result.lcc_curves.push_back(std::move(lcc_fig));
    result.efficiency_curves.push_back(std::move(eff_fig));
    result.spreading.push_back(std::move(spread));
  }
  return result;
}

void write_report_csv(std::ostream& out, const std::vector<MethodReport>& rows) {
  out << "method,lcc_ratio,lcc_reached,efficiency_ratio,efficiency_reached,F_steady\n";
  for (const auto& r : rows) {
    out << r.method << ',' << format_double(r.lcc_ratio.ratio) << ',' << (r.lcc_ratio.reached ? 1 : 0) << ','
        << format_double(r.efficiency_ratio.ratio) << ',' << (r.efficiency_ratio.reached ? 1 : 0) << ','
        << format_double(r.spreading_steady) << '\n';
  }
}

}  // namespace gnne
