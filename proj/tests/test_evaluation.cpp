#include <cmath>
#include <sstream>

#include "doctest.h"
#include "gnne/centrality.hpp"
#include "gnne/error.hpp"
#include "gnne/evaluation.hpp"
#include "gnne/methods.hpp"
#include "support.hpp"

using namespace gnne;
using namespace testing;

TEST_SUITE("evaluation") {

TEST_CASE("attack grid and removal counts") {
  const auto grid = attack_grid(0.02);
  CHECK(grid.size() == 51);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 1.0);
  for (std::size_t k = 1; k < grid.size(); ++k) CHECK(grid[k] > grid[k - 1]);
  CHECK(attack_grid(0.3).size() == 5);
  CHECK_THROWS_AS(attack_grid(0.0), ArgumentError);
  CHECK_THROWS_AS(attack_grid(0.6), ArgumentError);
  CHECK(removal_count(0.3, 10) == 3);
  CHECK(removal_count(7.0 / 332.0, 332) == 7);
  CHECK(removal_count(1.0, 5) == 5);
}

TEST_CASE("LCC curve endpoints and monotonicity") {
  const Graph g = generate_ba(300, 2, 1);
  const auto rank = degree_centrality(g);
  const auto c = lcc_curve(g, rank, 0.05);
  CHECK(c.values.front() == 1.0);
  CHECK(c.values.back() == 0.0);
  for (std::size_t k = 1; k < c.values.size(); ++k) CHECK(c.values[k] <= c.values[k - 1]);
  const auto per_node = lcc_curve_per_node(g, rank);
  CHECK(per_node.ratios.size() == 301);
  for (std::size_t k = 1; k < per_node.values.size(); ++k) CHECK(per_node.values[k] <= per_node.values[k - 1]);
  CHECK_THROWS_AS(lcc_curve(g, degree_centrality(path(4)), 0.1), ArgumentError);
}

TEST_CASE("LCC agrees with recomputation after each removal") {
  const Graph g = generate_ba(60, 2, 5);
  const auto rank = random_ranking(g, 3);
  const auto curve = lcc_curve_per_node(g, rank);
  for (std::size_t k = 0; k <= 60; ++k) {
    const Graph h = remove_nodes(g, rank.top(k));
    CHECK(curve.values[k] == static_cast<double>(largest_component_size(h)) / 60.0);
  }
}

TEST_CASE("degree attack beats random attack at r = 0.2") {
  const Graph g = generate_ba(500, 2, 2);
  const double by_degree = lcc_curve(g, degree_centrality(g), 0.1).values[2];
  double random_mean = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) random_mean += lcc_curve(g, random_ranking(g, s), 0.1).values[2];
  random_mean /= 20.0;
  CHECK(by_degree <= random_mean);
}

TEST_CASE("efficiency") {
  CHECK(efficiency(complete(6)) == doctest::Approx(1.0));
  CHECK(efficiency(path(3)) == doctest::Approx(5.0 / 6.0));
  CHECK(efficiency(make_graph(4, {})) == 0.0);
  CHECK(efficiency(path(3)) < 1.0);
  const Graph g = generate_ba(200, 3, 3);
  CHECK(efficiency(g) == doctest::Approx(serial::efficiency(g)).epsilon(1e-12));
  CHECK(efficiency(g) > 0.0);
  CHECK(efficiency(g) < 1.0);
}

TEST_CASE("efficiency on complete graphs under attack") {
  const std::size_t n = 10;
  const Graph k = complete(n);
  const auto rank = degree_centrality(k);
  const auto surv = efficiency_curve_per_node(k, rank, {EfficiencyBase::survivors, std::nullopt});
  const auto orig = efficiency_curve_per_node(k, rank, {EfficiencyBase::original, std::nullopt});
  for (std::size_t r = 0; r <= n; ++r) {
    const double left = static_cast<double>(n - r);
    CHECK(surv.values[r] == doctest::Approx(left >= 2 ? 1.0 : 0.0));
    CHECK(orig.values[r] == doctest::Approx(left * (left - 1) / (n * (n - 1.0))));
  }
  const auto c = efficiency_curve(k, rank, 0.1);
  CHECK(c.values.front() == doctest::Approx(efficiency(k)));
  for (double v : c.values) CHECK(v >= 0.0);
}

TEST_CASE("early stop in efficiency curves") {
  const Graph g = generate_ba(120, 2, 4);
  const auto rank = degree_centrality(g);
  const double mu0 = efficiency(g);
  const auto full = efficiency_curve_per_node(g, rank);
  const auto stopped = efficiency_curve_per_node(g, rank, {EfficiencyBase::survivors, 0.1 * mu0});
  CHECK(stopped.values.size() <= full.values.size());
  CHECK(removal_ratio_at(stopped, 0.1 * mu0).ratio == removal_ratio_at(full, 0.1 * mu0).ratio);
}

TEST_CASE("removal ratio lookup") {
  AttackCurve c{"x", {0.0, 0.1, 0.2, 0.3, 0.4}, {1.0, 0.5, 0.2, 0.01, 0.0}};
  CHECK(removal_ratio_at(c, 0.01).ratio == 0.3);
  CHECK(removal_ratio_at(c, 0.01).reached);
  CHECK(removal_ratio_at(c, 0.3).ratio == 0.2);
  CHECK(removal_ratio_at(c, 0.001).ratio >= removal_ratio_at(c, 0.01).ratio);
  AttackCurve never{"y", {0.0, 0.5, 1.0}, {1.0, 0.8, 0.5}};
  const auto r = removal_ratio_at(never, 0.01);
  CHECK(r.ratio == 1.0);
  CHECK_FALSE(r.reached);
}

TEST_CASE("curve CSV round trip") {
  const Graph g = generate_ba(100, 2, 6);
  auto c = lcc_curve_per_node(g, degree_centrality(g));
  std::stringstream buf;
  write_curve_csv(buf, c);
  const auto back = read_curve_csv(buf, "DC");
  CHECK(back.ratios == c.ratios);
  CHECK(back.values == c.values);
  CHECK(removal_ratio_at(back, 0.01).ratio == removal_ratio_at(c, 0.01).ratio);
}

TEST_CASE("method comparison report") {
  const Graph g = generate_ba(150, 2, 7);
  MethodContext ctx;
  std::vector<NamedRanking> rankings;
  for (const char* m : {"DC", "BC", "RANDOM"}) rankings.push_back({m, rank_method(m, g, ctx)});
  ComparisonConfig cfg;
  cfg.spreading_runs = 100;
  cfg.figure_step = 0.1;
  const auto a = compare_methods(g, rankings, cfg);
  REQUIRE(a.rows.size() == 3);
  CHECK(a.rows[0].method == "DC");
  CHECK(a.rows[2].method == "RANDOM");
  CHECK(a.lcc_curves.size() == 3);
  CHECK(a.lcc_curves[0].ratios.size() == 11);
  CHECK(a.rows[0].lcc_ratio.ratio < a.rows[2].lcc_ratio.ratio);
  const auto b = compare_methods(g, rankings, cfg);
  std::ostringstream ra, rb;
  write_report_csv(ra, a.rows);
  write_report_csv(rb, b.rows);
  CHECK(ra.str() == rb.str());
  CHECK(ra.str().rfind("method,lcc_ratio,lcc_reached,efficiency_ratio,efficiency_reached,F_steady\nDC,", 0) == 0);
}

TEST_CASE("method registry") {
  CHECK(kMethodNames.size() == 13);
  CHECK(is_method("GNNE"));
  CHECK_FALSE(is_method("XYZ"));
  const Graph g = generate_ba(50, 2, 1);
  MethodContext ctx;
  try {
    rank_method("XYZ", g, ctx);
    FAIL("expected an error");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("KSHELL") != std::string::npos);
  }
  CHECK_THROWS_AS(rank_method("GNNE", g, ctx), ArgumentError);
  CHECK(random_ranking(g, 4).order == random_ranking(g, 4).order);
  CHECK(random_ranking(g, 4).order != random_ranking(g, 5).order);
  ctx.gehc_walk.walks_per_node = 2;
  ctx.gehc_walk.walk_length = 10;
  ctx.gehc_walk.skip_gram.epochs = 1;
  for (auto name : kMethodNames) {
    if (needs_model(name)) continue;
    CHECK(rank_method(name, g, ctx).size() == 50);
  }
}

}  // TEST_SUITE
