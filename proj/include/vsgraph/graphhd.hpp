#pragma once

// GraphHD baseline: PageRank ranks pick node hypervectors from the rank basis,
// every edge binds its endpoints, and the graph is the majority bundle of its
// edges. Class prototypes are majority bundles of training graphs; inference
// picks the prototype with the highest Hamming similarity.

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <vector>

#include "vsgraph/graph.hpp"
#include "vsgraph/hypervector.hpp"
#include "vsgraph/spike_diffusion.hpp"

namespace vsgraph {

struct PageRankOptions {
  double damping = 0.85;
  double tolerance = 1e-10;
  std::size_t max_iterations = 1000;
};

using PageRankScores = Eigen::VectorXd;

/// Power iteration on the random walk of the undirected graph with uniform
/// teleportation; isolated nodes spread their mass uniformly. Stops once the
/// L1 change of an iteration drops below `tolerance`.
PageRankScores pagerank(const Graph& graph, const PageRankOptions& options = {});

/// Majority bundle of bind(B[r_i], B[r_j]) over the undirected edges, with
/// ranks from PageRank. Edgeless graphs encode to the zero vector. Ties use
/// tie_break_vector(basis.seed().master_seed, dim).
BinaryHypervector encode_graphhd(const Graph& graph, const RankBasis& basis,
                                 const PageRankOptions& options = {});

struct GraphHDModel {
  std::vector<BinaryHypervector> prototypes;
  std::size_t dim = 0;
  SeedSpec seed;

  [[nodiscard]] std::size_t num_classes() const noexcept { return prototypes.size(); }
};

/// Prototype c is the majority bundle of the encodings labeled c.
GraphHDModel fit_graphhd(std::span<const BinaryHypervector> encodings,
                         std::span<const std::size_t> labels, std::size_t num_classes,
                         const SeedSpec& seed);

/// Encodes `graphs` with `basis` and fits.
GraphHDModel fit_graphhd(std::span<const Graph> graphs, std::span<const std::size_t> labels,
                         const RankBasis& basis, std::size_t num_classes);

/// Per-class Hamming similarities.
std::vector<double> predict_graphhd_scores(const GraphHDModel& model, const BinaryHypervector& g);

/// argmax Hamming similarity; ties go to the smallest class index.
std::size_t predict_graphhd(const GraphHDModel& model, const BinaryHypervector& g);

}  // namespace vsgraph
