#include <gtest/gtest.h>

#include "gmm/generators.hpp"
#include "gmm/motifs.hpp"
#include "gmm/subiso.hpp"
#include "oracles.hpp"

namespace {

TEST(Census, Petersen) {
  const gmm::MotifSet s = gmm::enumerate_motifs(3);
  const gmm::MotifCensus c = gmm::census(s, gmm::petersen());
  EXPECT_EQ(c.counts, (std::vector<std::uint64_t>{15, 30, 0}));
  EXPECT_EQ(c.mappings, (std::vector<std::uint64_t>{30, 60, 0}));
  EXPECT_EQ(c.host_nodes, 10u);
  EXPECT_EQ(c.host_edges, 15u);
  EXPECT_EQ(&c.values(gmm::CountMode::kMappings), &c.mappings);
}

TEST(Census, CompleteGraphOnFour) {
  const gmm::MotifCensus c = gmm::census(gmm::enumerate_motifs(3), gmm::complete_graph(4));
  EXPECT_EQ(c.counts, (std::vector<std::uint64_t>{6, 0, 4}));
}

TEST(Census, StarHasOnlyOpenWedges) {
  const gmm::MotifCensus c = gmm::census(gmm::enumerate_motifs(3), gmm::star_graph(5));
  EXPECT_EQ(c.counts, (std::vector<std::uint64_t>{5, 10, 0}));
}

TEST(Census, EmptyAndTinyHosts) {
  const gmm::MotifSet s = gmm::enumerate_motifs(4);
  gmm::Graph lonely;
  lonely.add_node(3);
  const gmm::MotifCensus c = gmm::census(s, lonely);
  for (std::uint64_t x : c.counts) EXPECT_EQ(x, 0u);
  const gmm::MotifCensus d = gmm::census(s, gmm::Graph{{0, 1}});
  EXPECT_EQ(d.counts[0], 1u);
}

TEST(Census, MatchesIndependentSubsetOracle) {
  const gmm::MotifSet s = gmm::enumerate_motifs(4);
  gmm::Rng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const gmm::Graph host = oracle::random_graph(rng, 4 + rng.below(5), 0.2 + 0.6 * rng.uniform01());
    const gmm::MotifCensus c = gmm::census(s, host);
    const oracle::Matrix h = oracle::to_matrix(host);
    for (const gmm::Motif& m : s) {
      const std::uint64_t expected = oracle::induced_occurrences(oracle::to_matrix(m.graph), h);
      EXPECT_EQ(c.counts[m.index], expected);
      EXPECT_EQ(c.mappings[m.index], expected * m.automorphisms);
    }
  }
}

TEST(Census, JobsDoNotChangeTheResult) {
  const gmm::MotifSet s = gmm::enumerate_motifs(4);
  gmm::Rng rng(2);
  const gmm::Graph host = gmm::er_graph(40, 0.2, rng);
  const gmm::MotifCensus one = gmm::census(s, host, 1);
  const gmm::MotifCensus four = gmm::census(s, host, 4);
  EXPECT_EQ(one.counts, four.counts);
  EXPECT_EQ(one.mappings, four.mappings);
}

TEST(BruteForce, RejectsLargeHosts) {
  EXPECT_THROW(gmm::brute_force_census(gmm::enumerate_motifs(3), gmm::path_graph(gmm::kMaxBruteForceHost + 1)),
               std::invalid_argument);
}

TEST(BruteForce, Petersen) {
  const gmm::MotifSet s = gmm::enumerate_motifs(4);
  const gmm::MotifCensus fast = gmm::census(s, gmm::petersen());
  const gmm::MotifCensus slow = gmm::brute_force_census(s, gmm::petersen());
  EXPECT_EQ(fast.counts, slow.counts);
  EXPECT_EQ(fast.mappings, slow.mappings);
}

}  // namespace
