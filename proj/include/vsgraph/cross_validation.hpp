#pragma once

// Stratified repeated k-fold cross-validation with per-graph wall-clock
// timing, for both the VS-Graph encoder and the GraphHD baseline.
//
// Seeding: fold assignment for repeat r uses derive_stream({seed, kFolds}, r);
// the rank basis for (repeat r, fold f) uses derive_stream({seed, kBasis}, r, f).
// Neither depends on the model or on D, so two runs with the same seed see
// the same splits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vsgraph/graph.hpp"
#include "vsgraph/message_passing.hpp"
#include "vsgraph/model_kind.hpp"
#include "vsgraph/random.hpp"

namespace vsgraph {

struct CVConfig {
  std::size_t folds = 10;
  std::size_t repeats = 3;
  std::uint64_t master_seed = 0;
  ModelKind model = ModelKind::kVsGraph;
  /// encoder.dim is the dimension for run_cv; `dims` drives run_dim_sweep.
  EncoderConfig encoder;
  std::vector<std::size_t> dims;
  std::size_t workers = 1;
  /// Run one untimed fold before timing starts.
  bool warmup = true;
};

/// k disjoint, ascending index lists covering [0, labels.size()). Per-class
/// counts differ by at most one between folds. Throws std::invalid_argument
/// naming the class when a present class has fewer than k members.
std::vector<std::vector<std::size_t>> stratified_kfold(std::span<const std::size_t> labels,
                                                       std::size_t k, const SeedSpec& seed);

SeedSpec fold_seed(std::uint64_t master_seed, std::size_t repeat);
SeedSpec basis_seed(std::uint64_t master_seed, std::size_t repeat, std::size_t fold);

struct FoldResult {
  std::size_t repeat = 0;
  std::size_t fold = 0;
  std::size_t dim = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  std::size_t correct = 0;
  double accuracy = 0.0;
  double train_ms_per_graph = 0.0;
  double infer_ms_per_graph = 0.0;
};

struct TimingSummary {
  double mean = 0.0;
  double median = 0.0;
};

struct CVReport {
  std::string dataset;
  ModelKind model = ModelKind::kVsGraph;
  std::size_t dim = 0;
  CVConfig config;
  std::vector<FoldResult> folds;
  std::vector<double> per_fold_accuracy;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;
  /// Total correct over total tested; equals mean_accuracy for equal folds.
  double weighted_accuracy = 0.0;
  TimingSummary train_ms_per_graph;
  TimingSummary infer_ms_per_graph;
  /// Basis materialization per fold, kept out of the per-graph times.
  double setup_ms_per_fold = 0.0;
  std::size_t bytes_per_hypervector = 0;
  /// GraphHD only: graphs with no edges, encoded as the zero vector.
  std::size_t edgeless_graphs = 0;
};

struct SweepReport {
  std::string dataset;
  ModelKind model = ModelKind::kVsGraph;
  std::vector<CVReport> per_dim;
};

CVReport run_cv(const GraphDataset& dataset, const CVConfig& config);

/// run_cv at each entry of config.dims with everything else fixed.
SweepReport run_dim_sweep(const GraphDataset& dataset, const CVConfig& config);

/// Hyperparameter grid for VS-Graph model selection.
struct GridSpec {
  std::vector<std::size_t> hops{1, 2, 3};
  std::vector<std::size_t> layers{1, 2, 3};
  std::vector<double> alphas{0.3, 0.5, 0.7};
};

struct GridPoint {
  std::size_t hops = 0;
  std::size_t layers = 0;
  double alpha = 0.0;
  std::vector<double> per_fold_accuracy;
  double mean_accuracy = 0.0;
  double std_accuracy = 0.0;
};

struct GridReport {
  std::string dataset;
  std::size_t dim = 0;
  /// Ordered by hops, then layers, then alpha.
  std::vector<GridPoint> points;
  /// Highest mean accuracy; the first point in order wins ties.
  std::size_t best = 0;
  double wall_seconds = 0.0;
};

/// VS-Graph cross-validation at every grid point with the folds and bases of
/// run_cv, so each point's accuracies equal run_cv with that configuration.
/// All layer counts for one (hops, alpha) come from a single encoding pass.
/// No timing per fold is recorded.
GridReport run_grid_search(const GraphDataset& dataset, const CVConfig& config,
                           const GridSpec& grid = {});

/// Mean and population standard deviation.
std::pair<double, double> mean_std(std::span<const double> values);

}  // namespace vsgraph
