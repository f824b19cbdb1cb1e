#pragma once

// Prototype classifier: one L2-normalized class-mean prototype per class,
// inference by maximum cosine similarity.

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsgraph/hypervector.hpp"
#include "vsgraph/message_passing.hpp"

namespace vsgraph {

template <typename Scalar = double>
struct PrototypeModel {
  /// C x D, row c is the unit-norm (or zero) prototype of class c.
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> prototypes;
  EncoderConfig config;

  [[nodiscard]] std::size_t num_classes() const noexcept {
    return static_cast<std::size_t>(prototypes.rows());
  }
  [[nodiscard]] std::size_t dim() const noexcept {
    return static_cast<std::size_t>(prototypes.cols());
  }
};

/// Class means normalized as p / (|p| + eps). Every class in [0, C) needs at
/// least one embedding.
template <typename Scalar>
PrototypeModel<Scalar> fit(std::span<const GraphEmbedding<Scalar>> embeddings,
                           std::span<const std::size_t> labels, std::size_t num_classes,
                           const EncoderConfig& config = {}) {
  if (embeddings.size() != labels.size()) {
    throw std::invalid_argument("fit: " + std::to_string(embeddings.size()) + " embeddings but " +
                                std::to_string(labels.size()) + " labels");
  }
  if (embeddings.empty()) throw std::invalid_argument("fit: no training embeddings");
  const Eigen::Index dim = embeddings.front().vector.size();

  PrototypeModel<Scalar> model;
  model.config = config;
  model.prototypes.setZero(static_cast<Eigen::Index>(num_classes), dim);
  std::vector<std::size_t> counts(num_classes, 0);
  for (std::size_t k = 0; k < embeddings.size(); ++k) {
    const std::size_t c = labels[k];
    if (c >= num_classes) {
      throw std::invalid_argument("fit: label " + std::to_string(c) + " outside 0.." +
                                  std::to_string(num_classes - 1));
    }
    if (embeddings[k].vector.size() != dim) {
      throw std::invalid_argument("fit: embedding dimension mismatch");
    }
    model.prototypes.row(static_cast<Eigen::Index>(c)) += embeddings[k].vector.transpose();
    ++counts[c];
  }
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (counts[c] == 0) {
      throw std::invalid_argument("fit: class " + std::to_string(c) + " has no training graphs");
    }
    auto row = model.prototypes.row(static_cast<Eigen::Index>(c));
    row /= static_cast<Scalar>(counts[c]);
    row /= row.norm() + static_cast<Scalar>(kNormEpsilon);
  }
  return model;
}

/// Per-class scores z_hat . p_c, where z_hat = z / (|z| + eps).
template <typename Scalar>
DenseHypervector<Scalar> predict_scores(const PrototypeModel<Scalar>& model,
                                        const GraphEmbedding<Scalar>& z) {
  if (static_cast<std::size_t>(z.vector.size()) != model.dim()) {
    throw std::invalid_argument("predict: embedding dimension " + std::to_string(z.vector.size()) +
                                " differs from model dimension " + std::to_string(model.dim()));
  }
  return model.prototypes * normalized(z.vector);
}

/// argmax of predict_scores; exact ties go to the smallest class index.
template <typename Scalar>
std::size_t predict(const PrototypeModel<Scalar>& model, const GraphEmbedding<Scalar>& z) {
  const auto scores = predict_scores(model, z);
  std::size_t best = 0;
  for (Eigen::Index c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[static_cast<Eigen::Index>(best)]) best = static_cast<std::size_t>(c);
  }
  return best;
}

}  // namespace vsgraph
