#include <gtest/gtest.h>

#include <cmath>

#include "gmm/generators.hpp"
#include "gmm/stats.hpp"
#include "oracles.hpp"

namespace {

using gmm::Graph;

void expect_simple(const Graph& g) {
  std::size_t degree_sum = 0;
  for (gmm::NodeId id : g.nodes()) {
    const auto nb = g.neighbors(id);
    degree_sum += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      EXPECT_NE(nb[i], id);
      if (i) EXPECT_LT(nb[i - 1], nb[i]);
    }
  }
  EXPECT_EQ(degree_sum, 2 * g.edge_count());
}

TEST(ErGraph, ExtremeProbabilities) {
  gmm::Rng rng(1);
  const Graph full = gmm::er_graph(12, 1.0, rng);
  EXPECT_EQ(full.edge_count(), 66u);
  const Graph none = gmm::er_graph(12, 0.0, rng);
  EXPECT_EQ(none.node_count(), 12u);
  EXPECT_EQ(none.edge_count(), 0u);
}

TEST(ErGraph, EdgeCountMatchesBinomialMoments) {
  constexpr int kSeeds = 1000;
  double sum = 0, sum_sq = 0;
  for (int s = 0; s < kSeeds; ++s) {
    gmm::Rng rng(gmm::derive_seed(99, {static_cast<std::uint64_t>(s)}));
    const double e = static_cast<double>(gmm::er_graph(50, 0.5, rng).edge_count());
    sum += e;
    sum_sq += e * e;
  }
  const double m = sum / kSeeds;
  const double var = (sum_sq - kSeeds * m * m) / (kSeeds - 1);
  const double true_var = 1225 * 0.25;
  EXPECT_NEAR(m, 612.5, 10.0);
  EXPECT_NEAR(m, 612.5, 3 * std::sqrt(true_var / kSeeds));
  EXPECT_NEAR(var, true_var, 3 * true_var * std::sqrt(2.0 / (kSeeds - 1)));
}

TEST(RingLattice, SmallCases) {
  const Graph c6 = gmm::ring_lattice(6, 2);
  EXPECT_EQ(c6, (Graph{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}));
  EXPECT_THROW(gmm::ring_lattice(4, 4), std::invalid_argument);
  EXPECT_THROW(gmm::ring_lattice(10, 0), std::invalid_argument);
}

TEST(RingLattice, KFourHundredMatchesClosedForm) {
  const Graph g = gmm::ring_lattice(100, 4);
  EXPECT_EQ(g.edge_count(), 200u);
  EXPECT_DOUBLE_EQ(gmm::mean_clustering(g), 0.5);
  // Offsets d and 100 - d are ceil(min(d, 100 - d) / 2) hops apart.
  double sum = 0;
  for (int d = 1; d < 100; ++d) sum += std::ceil(std::min(d, 100 - d) / 2.0);
  const double closed_form = sum / 99.0;
  EXPECT_NEAR(gmm::characteristic_path_length(g), closed_form, 1e-12);
  EXPECT_NEAR(oracle::mean_distance(oracle::to_matrix(g)), closed_form, 1e-12);
}

TEST(RingLattice, OddKMeanDegree) {
  for (std::size_t n : {9, 10, 25, 100}) {
    for (std::size_t k : {1, 3, 5}) {
      if (n <= k) continue;
      const Graph g = gmm::ring_lattice(n, k);
      const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
      EXPECT_LE(std::abs(mean_degree - static_cast<double>(k)), 1.0) << n << " " << k;
      expect_simple(g);
    }
  }
  const Graph g = gmm::ring_lattice(100, 3);
  EXPECT_NEAR(gmm::mean_clustering(g), oracle::mean_clustering(oracle::to_matrix(g)), 1e-12);
  EXPECT_GT(gmm::mean_clustering(g), 0.0);
}

TEST(WsGraph, ZeroProbabilityIsTheLattice) {
  gmm::Rng rng(3);
  EXPECT_EQ(gmm::ws_graph(30, 4, 0.0, rng), gmm::ring_lattice(30, 4));
}

TEST(WsGraph, RewiringPreservesEdgeCount) {
  for (double p : {0.1, 0.5, 1.0}) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      gmm::Rng rng(s);
      const Graph g = gmm::ws_graph(40, 4, p, rng);
      EXPECT_EQ(g.edge_count(), 80u);
      EXPECT_EQ(g.node_count(), 40u);
      expect_simple(g);
    }
  }
}

TEST(WsGraph, EvenKLatticeIsRegular) {
  for (std::size_t k : {2, 4, 6}) {
    gmm::Rng rng(0);
    const Graph g = gmm::ws_graph(31, k, 0.0, rng);
    for (gmm::NodeId id : g.nodes()) EXPECT_EQ(g.degree(id), k);
  }
}

TEST(BaGraph, EdgeBookkeeping) {
  for (std::size_t m : {1, 2}) {
    for (std::size_t n : {4, 10, 100}) {
      gmm::Rng rng(n * 10 + m);
      const Graph g = gmm::ba_graph(n, m, rng);
      EXPECT_EQ(g.node_count(), n);
      EXPECT_EQ(g.edge_count(), 2 + m * (n - 3));
      expect_simple(g);
    }
  }
  // The seed path grows to m + 1 nodes once m exceeds 2.
  for (std::size_t m : {3, 5, 7}) {
    gmm::Rng rng(m);
    const Graph g = gmm::ba_graph(100, m, rng);
    EXPECT_EQ(g.edge_count(), m + m * (100 - m - 1));
    expect_simple(g);
  }
}

TEST(BaGraph, TreeForMOne) {
  gmm::Rng rng(8);
  const Graph g = gmm::ba_graph(60, 1, rng);
  EXPECT_TRUE(gmm::is_connected(g));
  EXPECT_EQ(g.edge_count(), g.node_count() - 1);
}

TEST(BaGraph, HubsEmerge) {
  int with_hub = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    gmm::Rng rng(gmm::derive_seed(5, {s}));
    const Graph g = gmm::ba_graph(100, 1, rng);
    std::size_t max_degree = 0;
    for (gmm::NodeId id : g.nodes()) max_degree = std::max(max_degree, g.degree(id));
    const double mean_degree = 2.0 * static_cast<double>(g.edge_count()) / 100.0;
    with_hub += static_cast<double>(max_degree) > 3 * mean_degree;
  }
  EXPECT_GE(with_hub, 90);
}

TEST(Petersen, StructureByBruteForce) {
  const Graph p = gmm::petersen();
  EXPECT_EQ(p.node_count(), 10u);
  EXPECT_EQ(p.edge_count(), 15u);
  for (gmm::NodeId id : p.nodes()) EXPECT_EQ(p.degree(id), 3u);
  const oracle::Matrix a = oracle::to_matrix(p);
  // Girth 5: no triangle, no 4-cycle (no two nodes share two neighbours), a 5-cycle exists.
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = i + 1; j < 10; ++j) {
      std::size_t common = 0;
      for (std::size_t x = 0; x < 10; ++x) common += a[i][x] && a[j][x];
      EXPECT_LE(common, 1u);
      if (a[i][j]) EXPECT_EQ(common, 0u);
    }
  }
  EXPECT_TRUE(a[0][1] && a[1][2] && a[2][3] && a[3][4] && a[4][0]);
  EXPECT_EQ(oracle::automorphisms(a), 120u);
}

TEST(SmallGenerators, Shapes) {
  EXPECT_EQ(gmm::path_graph(5).edge_count(), 4u);
  EXPECT_EQ(gmm::complete_graph(5).edge_count(), 10u);
  const Graph s = gmm::star_graph(9);
  EXPECT_EQ(s.node_count(), 10u);
  EXPECT_EQ(s.degree(0), 9u);
}

}  // namespace
