#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "vsgraph/graphhd.hpp"

using namespace vsgraph;

namespace {
Graph from_oracle(std::size_t n, const oracle::EdgeList& edges) {
  std::vector<Edge> e(edges.begin(), edges.end());
  return make_graph(n, e);
}
}  // namespace

TEST(PageRank, RegularGraphIsUniform) {
  const Graph cycle = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  const auto pr = pagerank(cycle);
  for (Eigen::Index i = 0; i < pr.size(); ++i) EXPECT_NEAR(pr[i], 0.2, 1e-12);
}

TEST(PageRank, StarMatchesOracle) {
  const oracle::EdgeList edges{{0, 1}, {0, 2}, {0, 3}};
  const auto expected = oracle::pagerank(4, edges);
  const auto pr = pagerank(from_oracle(4, edges));
  for (Eigen::Index i = 1; i < 4; ++i) EXPECT_GT(pr[0], pr[i]);
  // Bipartite graphs contract at exactly the damping rate; a step-size stop
  // at 1e-8 with at most 100 iterations leaves about 2e-8 of error here.
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(pr[static_cast<Eigen::Index>(i)], expected[i], 1e-9);
  }
  const auto loose = pagerank(from_oracle(4, edges), {0.85, 1e-8, 100});
  EXPECT_NEAR(loose[0], expected[0], 5e-8);
  const auto tight = pagerank(from_oracle(4, edges), {0.85, 1e-13, 1000});
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(tight[static_cast<Eigen::Index>(i)], expected[i], 1e-12);
  }
}

TEST(PageRank, MatchesDenseOracleOnRandomGraphs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> density(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = size(rng);
    const auto edges = oracle::random_edges(rng, n, density(rng));
    const auto pr = pagerank(from_oracle(n, edges));
    const auto expected = oracle::pagerank(n, edges);
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(pr[static_cast<Eigen::Index>(i)] - expected[i]));
    }
    EXPECT_NEAR(pr.sum(), 1.0, 1e-8);
  }
  EXPECT_LE(worst, 1e-8);
}

TEST(PageRank, Errors) {
  EXPECT_THROW(pagerank(Graph{}), std::invalid_argument);
  EXPECT_THROW(pagerank(make_graph(2, {{0, 1}}), {1.0, 1e-8, 100}), std::invalid_argument);
}

TEST(EncodeGraphHD, Examples) {
  RankBasis basis({3, streams::kBasis}, 1024);
  EXPECT_EQ(encode_graphhd(make_graph(2, {{0, 1}}), basis), BinaryHypervector(1024));
  EXPECT_EQ(encode_graphhd(make_graph(3, {{0, 1}, {1, 2}}), basis), bind(basis[0], basis[1]));
  EXPECT_EQ(encode_graphhd(make_graph(4, {}), basis), BinaryHypervector(1024));
}

TEST(EncodeGraphHD, MatchesNaiveConstruction) {
  RankBasis basis({3, streams::kBasis}, 700);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Graph g = random_graph({i, streams::kGraphs}, 10, 0.35);
    if (g.num_edges() == 0) continue;
    const auto pr = pagerank(g);
    std::vector<double> score(pr.data(), pr.data() + pr.size());
    const auto rank = oracle::competition_ranks(score);
    std::vector<int> count(700, 0);
    for (const auto& [a, b] : g.edges()) {
      for (std::size_t d = 0; d < 700; ++d) count[d] += basis[rank[a]].get(d) != basis[rank[b]].get(d);
    }
    const auto tie = tie_break_vector(3, 700);
    const auto out = encode_graphhd(g, basis);
    const int m = static_cast<int>(g.num_edges());
    for (std::size_t d = 0; d < 700; ++d) {
      const bool expected = 2 * count[d] > m || (2 * count[d] == m && tie.get(d));
      ASSERT_EQ(out.get(d), expected);
    }
  }
}

TEST(EncodeGraphHD, IsomorphismInvariant) {
  std::mt19937_64 rng(5);
  RankBasis basis({3, streams::kBasis}, 2048);
  for (std::uint64_t i = 0; i < 10; ++i) {
    const Graph g = random_graph({i, 8}, 11, 0.3);
    const auto h = encode_graphhd(g, basis);
    std::vector<NodeId> perm(g.num_nodes());
    std::iota(perm.begin(), perm.end(), 0u);
    for (int p = 0; p < 5; ++p) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(encode_graphhd(permute_nodes(g, perm), basis), h);
    }
  }
}

TEST(FitGraphHD, Prototypes) {
  const SeedSpec seed{6, streams::kBasis};
  const auto a = random_hypervector(seed, 100, 512);
  const auto b = random_hypervector(seed, 101, 512);
  const auto c = random_hypervector(seed, 102, 512);
  const std::vector<BinaryHypervector> one{a, b};
  const std::vector<std::size_t> y01{0, 1};
  auto m = fit_graphhd(one, y01, 2, seed);
  EXPECT_EQ(m.prototypes[0], a);
  EXPECT_EQ(m.prototypes[1], b);

  const std::vector<BinaryHypervector> three{a, a, a};
  const std::vector<std::size_t> y000{0, 0, 0};
  EXPECT_EQ(fit_graphhd(three, y000, 1, seed).prototypes[0], a);

  const std::vector<BinaryHypervector> pair{b, c};
  const std::vector<std::size_t> y00{0, 0};
  const std::vector<BinaryHypervector> bc{b, c};
  EXPECT_EQ(fit_graphhd(pair, y00, 1, seed).prototypes[0], bundle(bc, tie_break_vector(6, 512)));

  EXPECT_THROW(fit_graphhd(one, y00, 2, seed), std::invalid_argument);
}

TEST(PredictGraphHD, Examples) {
  const SeedSpec seed{6, streams::kBasis};
  const auto p0 = random_hypervector(seed, 0, 512);
  auto p1 = random_hypervector(seed, 1, 512);
  // Equidistance needs an even number of differing components.
  if (hamming_distance(p0, p1) % 2 == 1) p1.set(0, !p1.get(0));
  GraphHDModel m{{p0, p1}, 512, seed};
  EXPECT_EQ(predict_graphhd(m, p0), 0u);
  EXPECT_DOUBLE_EQ(predict_graphhd_scores(m, p0)[0], 1.0);
  GraphHDModel single{{p0}, 512, seed};
  EXPECT_EQ(predict_graphhd(single, ~p0), 0u);

  // A vector equidistant from both prototypes.
  auto g = p0;
  std::size_t flipped0 = 0;
  std::size_t flipped1 = 0;
  for (std::size_t d = 0; d < 512; ++d) {
    if (p0.get(d) != p1.get(d)) {
      if (flipped0 <= flipped1) {
        g.set(d, p1.get(d));
        ++flipped0;
      } else {
        ++flipped1;
      }
    }
  }
  ASSERT_EQ(hamming_distance(g, p0), hamming_distance(g, p1));
  EXPECT_EQ(predict_graphhd(m, g), 0u);
  EXPECT_THROW(predict_graphhd(m, BinaryHypervector(64)), std::invalid_argument);
}
