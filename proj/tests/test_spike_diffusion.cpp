#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "vsgraph/graph.hpp"
#include "vsgraph/spike_diffusion.hpp"

using namespace vsgraph;

namespace {
Graph from_oracle(std::size_t n, const oracle::EdgeList& edges) {
  std::vector<Edge> e(edges.begin(), edges.end());
  return make_graph(n, e);
}
const Graph kTriangle = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
const Graph kPath = make_graph(3, {{0, 1}, {1, 2}});
}  // namespace

TEST(Diffuse, ZeroHopsIsOnes) {
  EXPECT_EQ(diffuse(kPath, 0), Eigen::VectorXd::Ones(3));
}

TEST(Diffuse, SmallGraphs) {
  const auto t = diffuse(kTriangle, 1);
  EXPECT_EQ(t[0], t[1]);
  EXPECT_EQ(t[1], t[2]);
  const auto p = diffuse(kPath, 1);
  EXPECT_GT(p[1], p[0]);
  EXPECT_EQ(p[0], p[2]);
  // Rescaling is uniform, so ratios match the unscaled counts [1, 2, 1].
  EXPECT_DOUBLE_EQ(p[1] / p[0], 2.0);
}

TEST(Diffuse, LargeHopsStayFinite) {
  const Graph g = random_graph({5, 5}, 40, 0.5);
  const auto s = diffuse(g, 200);
  EXPECT_TRUE(s.allFinite());
  EXPECT_GT(s.maxCoeff(), 0.0);
}

TEST(RankNodes, Examples) {
  EXPECT_EQ(rank_nodes(std::vector<double>{1, 2, 1}), (RankVector{1, 0, 1}));
  EXPECT_EQ(rank_nodes(std::vector<double>{7, 7, 7, 7}), (RankVector{0, 0, 0, 0}));
  EXPECT_EQ(rank_nodes(std::vector<double>{5, 3, 4, 3}), (RankVector{0, 2, 1, 2}));
  // A tie above pushes the next value down by the size of the tie.
  EXPECT_EQ(rank_nodes(std::vector<double>{5, 5, 4, 3}), (RankVector{0, 0, 2, 3}));
}

TEST(RankNodes, ToleranceMergesNearTies) {
  EXPECT_EQ(rank_nodes(std::vector<double>{1.0, 1.0 + 1e-12, 0.5}), (RankVector{0, 0, 2}));
  EXPECT_EQ(rank_nodes(std::vector<double>{1.0, 1.0 + 1e-6}), (RankVector{1, 0}));
}

TEST(RankNodes, MatchesExactWalkCountsOnRandomGraphs) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_int_distribution<std::size_t> hops(0, 3);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    const std::size_t k = hops(rng);
    const auto edges = oracle::random_edges(rng, n, density(rng));
    const auto expected = oracle::competition_ranks(oracle::walk_counts(n, edges, k));
    EXPECT_EQ(rank_nodes(diffuse(from_oracle(n, edges), k)), expected) << "trial " << trial;
  }
}

TEST(RankBasis, LazyAndStable) {
  RankBasis basis({4, streams::kBasis}, 8192);
  EXPECT_EQ(basis.capacity(), 0u);
  const BinaryHypervector& b0 = basis[0];
  const BinaryHypervector* addr = &b0;
  basis.reserve(500);
  EXPECT_EQ(&basis[0], addr);
  EXPECT_EQ(basis[0], random_hypervector({4, streams::kBasis}, 0, 8192));
  const double dist = static_cast<double>(hamming_distance(basis[0], basis[1])) / 8192.0;
  EXPECT_GE(dist, 0.48);
  EXPECT_LE(dist, 0.52);
  EXPECT_EQ(basis_vector(basis, 0), basis[0]);
}

TEST(RankBasis, ConcurrentGrowth) {
  RankBasis basis({4, streams::kBasis}, 256);
  std::vector<std::jthread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&basis, t] {
      for (std::size_t r = 0; r < 200; ++r) (void)basis[(r * 7 + t) % 200];
    });
  }
  threads.clear();
  for (std::size_t r = 0; r < 200; ++r) {
    EXPECT_EQ(basis[r], random_hypervector({4, streams::kBasis}, r, 256));
  }
}

TEST(AssignNodeHvs, Examples) {
  RankBasis basis({1, streams::kBasis}, 512);
  for (const auto* hv : assign_node_hvs(kTriangle, 1, basis)) EXPECT_EQ(*hv, basis[0]);
  const auto p = assign_node_hvs(kPath, 1, basis);
  EXPECT_EQ(*p[1], basis[0]);
  EXPECT_EQ(*p[0], basis[1]);
  EXPECT_EQ(*p[2], basis[1]);
  const Graph single = make_graph(1, {});
  for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(*assign_node_hvs(single, k, basis)[0], basis[0]);
}
