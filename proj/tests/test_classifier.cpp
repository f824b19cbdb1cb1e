#include <gtest/gtest.h>

#include <vector>

#include "vsgraph/classifier.hpp"

using namespace vsgraph;

namespace {
GraphEmbedding<double> emb(std::initializer_list<double> v) {
  GraphEmbedding<double> z{Eigen::VectorXd(static_cast<Eigen::Index>(v.size()))};
  Eigen::Index i = 0;
  for (const double x : v) z.vector[i++] = x;
  return z;
}
}  // namespace

TEST(Fit, OnePerClassNormalizes) {
  const std::vector<GraphEmbedding<double>> z{emb({3, 4, 0}), emb({0, 0, 2})};
  const std::vector<std::size_t> y{0, 1};
  const auto m = fit<double>(z, y, 2);
  EXPECT_EQ(m.num_classes(), 2u);
  EXPECT_EQ(m.dim(), 3u);
  const double n0 = 5.0 + kNormEpsilon;
  EXPECT_DOUBLE_EQ(m.prototypes(0, 0), 3.0 / n0);
  EXPECT_DOUBLE_EQ(m.prototypes(0, 1), 4.0 / n0);
  EXPECT_DOUBLE_EQ(m.prototypes(1, 2), 2.0 / (2.0 + kNormEpsilon));
}

TEST(Fit, MeanIsIdempotent) {
  const std::vector<GraphEmbedding<double>> one{emb({0.2, 0.7, 0.1})};
  const std::vector<GraphEmbedding<double>> two{emb({0.2, 0.7, 0.1}), emb({0.2, 0.7, 0.1})};
  const std::vector<std::size_t> y1{0};
  const std::vector<std::size_t> y2{0, 0};
  EXPECT_TRUE(fit<double>(one, y1, 1).prototypes.isApprox(fit<double>(two, y2, 1).prototypes, 1e-15));
}

TEST(Fit, ZeroEmbeddingGivesZeroPrototype) {
  const std::vector<GraphEmbedding<double>> z{emb({0, 0}), emb({1, 0})};
  const std::vector<std::size_t> y{0, 1};
  const auto m = fit<double>(z, y, 2);
  EXPECT_EQ(m.prototypes.row(0).norm(), 0.0);
}

TEST(Fit, Errors) {
  const std::vector<GraphEmbedding<double>> z{emb({1, 0}), emb({0, 1})};
  const std::vector<std::size_t> y{0, 0};
  try {
    fit<double>(z, y, 2);
    FAIL() << "expected invalid_argument";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("class 1"), std::string::npos);
  }
  const std::vector<std::size_t> short_y{0};
  EXPECT_THROW(fit<double>(z, short_y, 1), std::invalid_argument);
  EXPECT_THROW(fit<double>({}, {}, 1), std::invalid_argument);
}

TEST(Predict, Examples) {
  const std::vector<GraphEmbedding<double>> z{emb({1, 0, 0}), emb({0, 1, 0})};
  const std::vector<std::size_t> y{0, 1};
  const auto m = fit<double>(z, y, 2);
  EXPECT_EQ(predict(m, emb({1, 0, 0})), 0u);
  EXPECT_EQ(predict(m, emb({0, 1, 0})), 1u);
  EXPECT_EQ(predict(m, emb({0, 0, 0})), 0u);
  EXPECT_EQ(predict(m, emb({1, 1, 0})), 0u);
  const auto s = predict_scores(m, emb({1, 0, 0}));
  EXPECT_NEAR(s[0], 1.0, 1e-9);
  EXPECT_NEAR(s[1], 0.0, 1e-9);
  const auto orth = predict_scores(m, emb({0, 0, 5}));
  EXPECT_NEAR(orth.cwiseAbs().maxCoeff(), 0.0, 1e-9);
  EXPECT_THROW(predict(m, emb({1, 0})), std::invalid_argument);
}
