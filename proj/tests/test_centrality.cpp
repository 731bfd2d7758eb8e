#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "gnne/centrality.hpp"
#include "gnne/error.hpp"
#include "gnne/rng.hpp"
#include "support.hpp"

using namespace gnne;
using namespace testing;

namespace {


double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Relabels g by perm: node v becomes perm[v].
Graph relabel(const Graph& g, const std::vector<NodeId>& perm) {
  std::vector<Edge> e;
  for (auto [u, v] : g.edges()) e.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.num_nodes(), e);
}

}  // namespace

TEST_SUITE("centrality") {

TEST_CASE("degree centrality") {
  const auto s = degree_centrality(star(4)).scores;
  CHECK(s[0] == 1.0);
  CHECK(s[1] == 0.25);
  for (double x : degree_centrality(complete(6)).scores) CHECK(x == 1.0);
  CHECK_THROWS_AS(degree_centrality(Graph::from_edges(1, {})), ArgumentError);
}

TEST_CASE("k-shell") {
  // A tree.
  for (std::size_t k : shell_indices(make_graph(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}}))) CHECK(k == 1);
  const auto tp = shell_indices(make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
  CHECK(tp == std::vector<std::size_t>{2, 2, 2, 1});
  for (std::size_t k : shell_indices(complete(5))) CHECK(k == 4);
  CHECK(shell_indices(make_graph(3, {{0, 1}}))[2] == 0);
}

TEST_CASE("betweenness") {
  const auto p3 = betweenness(path(3)).scores;
  CHECK(p3[1] == doctest::Approx(1.0 / 3.0));
  CHECK(p3[0] == 0.0);
  for (double x : betweenness(complete(5)).scores) CHECK(x == 0.0);
}

TEST_CASE("closeness and harmonic") {
  const auto c = closeness(path(3)).scores;
  CHECK(c[1] == doctest::Approx(1.0));
  CHECK(c[0] == doctest::Approx(2.0 / 3.0));
  for (double x : closeness(complete(4)).scores) CHECK(x == doctest::Approx(1.0));

  const auto h = harmonic(path(3)).scores;
  CHECK(h[0] == doctest::Approx(0.75));
  for (double x : harmonic(complete(4)).scores) CHECK(x == doctest::Approx(1.0));
  CHECK(harmonic(make_graph(3, {{0, 1}})).scores[2] == 0.0);
  CHECK(closeness(make_graph(3, {{0, 1}})).scores[2] == 0.0);
}

TEST_CASE("eigenvector") {
  for (double x : eigenvector(complete(5)).scores) CHECK(x == doctest::Approx(1.0 / std::sqrt(5.0)));
  const auto s = eigenvector(star(4)).scores;
  CHECK(s[0] / s[1] == doctest::Approx(2.0));

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = generate_ba(80, 2, seed);
    const auto r = eigenvector_centrality(g);
    CHECK(r.converged);
    for (NodeId i = 0; i < g.num_nodes(); ++i) {
      double ax = 0.0;
      for (NodeId j : g.neighbors(i)) ax += r.ranking.scores[j];
      CHECK(std::abs(ax - r.eigenvalue * r.ranking.scores[i]) < 1e-8);
    }
  }
}

TEST_CASE("collective influence") {
  CHECK(collective_influence(path(5), 2).scores[2] == 0.0);
  CHECK(collective_influence(star(4), 1).scores[0] == 0.0);
  const Graph g = generate_ba(50, 2, 1);
  for (std::size_t l : {1, 2, 3}) {
    const auto s = collective_influence(g, l).scores;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (g.degree(v) == 1) CHECK(s[v] == 0.0);
    }
  }
  CHECK_THROWS_AS(collective_influence(g, 0), ArgumentError);
}

TEST_CASE("IKS") {
  const auto k4 = iks(complete(4));
  CHECK(k4.order == std::vector<NodeId>{0, 1, 2, 3});
  const auto tp = iks(make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}));
  CHECK(tp.order.back() == 3);
  for (double e : iks_entropy(generate_ba(100, 2, 4))) CHECK(e >= 0.0);
}

TEST_CASE("GEHC") {
  const Matrix same(3, 4, 0.5);
  for (double x : gehc(complete(3), same).scores) CHECK(x == 32.0);
  const Matrix emb(4, 2, 0.0);
  CHECK(gehc(make_graph(4, {{0, 1}, {1, 2}, {2, 0}}), emb).scores[3] == 0.0);

  Matrix far(3, 1, 0.0), near(3, 1, 0.0);
  far(1, 0) = 2.0;
  near(1, 0) = 1.0;
  CHECK(gehc(complete(3), near).scores[0] > gehc(complete(3), far).scores[0]);
  CHECK_THROWS_AS(gehc(complete(3), Matrix(2, 2)), ArgumentError);
}

TEST_CASE("scores follow node relabelling") {
  const Graph g = generate_ba(40, 2, 21);
  std::vector<NodeId> perm(g.num_nodes());
  std::iota(perm.begin(), perm.end(), NodeId{0});
  Rng rng(3);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
  const Graph h = relabel(g, perm);
  using Fn = RankedList (*)(const Graph&);
  const Fn fns[] = {degree_centrality, k_shell, betweenness, closeness, harmonic, eigenvector, iks};
  for (Fn f : fns) {
    const auto a = f(g).scores;
    const auto b = f(h).scores;
    for (NodeId v = 0; v < g.num_nodes(); ++v) CHECK(a[v] == doctest::Approx(b[perm[v]]).epsilon(1e-9));
  }
  const auto ca = collective_influence(g, 2).scores;
  const auto cb = collective_influence(h, 2).scores;
  for (NodeId v = 0; v < g.num_nodes(); ++v) CHECK(ca[v] == cb[perm[v]]);
}

TEST_CASE("brute-force oracle agreement, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& sg : oracle::connected_graphs(n)) {
      const Graph g = to_graph(sg);
      const auto a = adjacency(g);
      REQUIRE(max_abs_diff(degree_centrality(g).scores, oracle::degree_centrality(a)) < 1e-12);
      REQUIRE(max_abs_diff(betweenness(g).scores, oracle::betweenness(a)) < 1e-9);
      REQUIRE(max_abs_diff(closeness(g).scores, oracle::closeness(a)) < 1e-9);
      REQUIRE(max_abs_diff(harmonic(g).scores, oracle::harmonic(a)) < 1e-9);
      REQUIRE(max_abs_diff(eigenvector(g).scores, oracle::eigenvector(a)) < 1e-9);
      REQUIRE(max_abs_diff(collective_influence(g, 2).scores, oracle::collective_influence(a, 2)) == 0.0);
      const auto shells = shell_indices(g);
      const auto expected = oracle::shell_index(a);
      for (int v = 0; v < n; ++v) REQUIRE(shells[v] == static_cast<std::size_t>(expected[v]));
      REQUIRE(iks(g).order == oracle::iks_order(a));
    }
  }
}

TEST_CASE("parallel kernels equal the serial references") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const Graph g = generate_ba(300, 3, seed);
    // Block sums reassociate the totals; per-node kernels are bit-identical.
    CHECK(max_abs_diff(betweenness(g).scores, serial::betweenness(g).scores) < 1e-12);
    CHECK(closeness(g).scores == serial::closeness(g).scores);
    CHECK(harmonic(g).scores == serial::harmonic(g).scores);
  }
}

}  // TEST_SUITE
