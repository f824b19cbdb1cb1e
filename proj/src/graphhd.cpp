#include "vsgraph/graphhd.hpp"

#include <stdexcept>
#include <string>

namespace vsgraph {

PageRankScores pagerank(const Graph& graph, const PageRankOptions& options) {
  const std::size_t n = graph.num_nodes();
  if (n == 0) throw std::invalid_argument("pagerank: empty graph");
  if (!(options.damping > 0.0 && options.damping < 1.0)) {
    throw std::invalid_argument("pagerank: damping must lie in (0, 1)");
  }
  const auto size = static_cast<Eigen::Index>(n);
  const double inv_n = 1.0 / static_cast<double>(n);
  const double d = options.damping;

  // Mass each node sends along one of its edges.
  Eigen::VectorXd share(size);
  PageRankScores scores = PageRankScores::Constant(size, inv_n);
  PageRankScores next(size);
  for (std::size_t iter = 0; iter < options.max_iterations; ++iter) {
    double dangling = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto deg = graph.degree(i);
      const auto ii = static_cast<Eigen::Index>(i);
      if (deg == 0) {
        dangling += scores[ii];
        share[ii] = 0.0;
      } else {
        share[ii] = scores[ii] / static_cast<double>(deg);
      }
    }
    const double base = (1.0 - d) * inv_n + d * dangling * inv_n;
    for (std::size_t i = 0; i < n; ++i) {
      double incoming = 0.0;
      for (const NodeId j : graph.neighbors(i)) incoming += share[j];
      next[static_cast<Eigen::Index>(i)] = base + d * incoming;
    }
    const double change = (next - scores).lpNorm<1>();
    scores.swap(next);
    if (change < options.tolerance) break;
  }
  return scores;
}

BinaryHypervector encode_graphhd(const Graph& graph, const RankBasis& basis,
                                 const PageRankOptions& options) {
  const std::size_t dim = basis.dim();
  if (graph.num_edges() == 0) return BinaryHypervector(dim);

  const PageRankScores scores = pagerank(graph, options);
  const RankVector ranks =
      rank_nodes(std::span<const double>(scores.data(), static_cast<std::size_t>(scores.size())));

  std::vector<BinaryHypervector> edge_hvs;
  edge_hvs.reserve(graph.num_edges());
  for (const auto& [i, j] : graph.edges()) {
    edge_hvs.push_back(bind(basis[ranks[i]], basis[ranks[j]]));
  }
  return bundle(edge_hvs, tie_break_vector(basis.seed().master_seed, dim));
}

GraphHDModel fit_graphhd(std::span<const BinaryHypervector> encodings,
                         std::span<const std::size_t> labels, std::size_t num_classes,
                         const SeedSpec& seed) {
  if (encodings.size() != labels.size()) {
    throw std::invalid_argument("fit_graphhd: encodings and labels differ in length");
  }
  if (encodings.empty()) throw std::invalid_argument("fit_graphhd: no training graphs");
  const std::size_t dim = encodings.front().dim();

  std::vector<std::vector<BinaryHypervector>> members(num_classes);
  for (std::size_t k = 0; k < encodings.size(); ++k) {
    if (labels[k] >= num_classes) {
      throw std::invalid_argument("fit_graphhd: label " + std::to_string(labels[k]) +
                                  " out of range");
    }
    members[labels[k]].push_back(encodings[k]);
  }

  const BinaryHypervector tie = tie_break_vector(seed.master_seed, dim);
  GraphHDModel model;
  model.dim = dim;
  model.seed = seed;
  model.prototypes.reserve(num_classes);
  for (std::size_t c = 0; c < num_classes; ++c) {
    if (members[c].empty()) {
      throw std::invalid_argument("fit_graphhd: class " + std::to_string(c) +
                                  " has no training graphs");
    }
    model.prototypes.push_back(bundle(members[c], tie));
  }
  return model;
}

GraphHDModel fit_graphhd(std::span<const Graph> graphs, std::span<const std::size_t> labels,
                         const RankBasis& basis, std::size_t num_classes) {
  std::vector<BinaryHypervector> encodings;
  encodings.reserve(graphs.size());
  for (const auto& g : graphs) encodings.push_back(encode_graphhd(g, basis));
  return fit_graphhd(encodings, labels, num_classes, basis.seed());
}

std::vector<double> predict_graphhd_scores(const GraphHDModel& model,
                                           const BinaryHypervector& g) {
  if (g.dim() != model.dim) {
    throw std::invalid_argument("predict_graphhd: hypervector dimension " +
                                std::to_string(g.dim()) + " differs from model dimension " +
                                std::to_string(model.dim));
  }
  std::vector<double> scores;
  scores.reserve(model.prototypes.size());
  for (const auto& p : model.prototypes) scores.push_back(hamming_similarity(g, p));
  return scores;
}

std::size_t predict_graphhd(const GraphHDModel& model, const BinaryHypervector& g) {
  const auto scores = predict_graphhd_scores(model, g);
  std::size_t best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[best]) best = c;
  }
  return best;
}

}  // namespace vsgraph
