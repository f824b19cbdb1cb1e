#include "vsgraph/cross_validation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "vsgraph/classifier.hpp"
#include "vsgraph/graphhd.hpp"
#include "vsgraph/spike_diffusion.hpp"

namespace vsgraph {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start, Clock::time_point stop) {
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

// Calls fn(i) for i in [0, n), split into contiguous chunks over `workers` threads.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

struct FoldOutcome {
  std::size_t correct = 0;
  double train_ms = 0.0;
  double infer_ms = 0.0;
  double setup_ms = 0.0;
};

// One train/test split. Training time covers encoding the training graphs
// plus fitting; inference time covers encoding plus prediction of the test
// graphs.
FoldOutcome run_fold(const GraphDataset& ds, const CVConfig& config, std::size_t dim,
                     const SeedSpec& seed, std::span<const std::size_t> train,
                     std::span<const std::size_t> test, std::size_t max_nodes) {
  FoldOutcome out;
  const auto t_setup = Clock::now();
  RankBasis basis(seed, dim);
  basis.reserve(max_nodes);
  const auto t_train = Clock::now();
  out.setup_ms = elapsed_ms(t_setup, t_train);

  std::vector<std::size_t> train_labels;
  train_labels.reserve(train.size());
  for (const auto i : train) train_labels.push_back(ds.labels[i]);
  std::vector<std::size_t> predictions(test.size());

  if (config.model == ModelKind::kVsGraph) {
    EncoderConfig enc = config.encoder;
    enc.dim = dim;
    enc.seed = seed;
    std::vector<GraphEmbedding<double>> embeddings(train.size());
    parallel_for(train.size(), config.workers, [&](std::size_t k) {
      embeddings[k] = encode_graph(ds.graphs[train[k]], enc, basis);
    });
    const auto model = fit<double>(embeddings, train_labels, ds.num_classes, enc);
    const auto t_infer = Clock::now();
    out.train_ms = elapsed_ms(t_train, t_infer);

    parallel_for(test.size(), config.workers, [&](std::size_t k) {
      predictions[k] = predict(model, encode_graph(ds.graphs[test[k]], enc, basis));
    });
    out.infer_ms = elapsed_ms(t_infer, Clock::now());
  } else {
    std::vector<BinaryHypervector> encodings(train.size());
    parallel_for(train.size(), config.workers, [&](std::size_t k) {
      encodings[k] = encode_graphhd(ds.graphs[train[k]], basis);
    });
    const auto model = fit_graphhd(encodings, train_labels, ds.num_classes, seed);
    const auto t_infer = Clock::now();
    out.train_ms = elapsed_ms(t_train, t_infer);

    parallel_for(test.size(), config.workers, [&](std::size_t k) {
      predictions[k] = predict_graphhd(model, encode_graphhd(ds.graphs[test[k]], basis));
    });
    out.infer_ms = elapsed_ms(t_infer, Clock::now());
  }

  for (std::size_t k = 0; k < test.size(); ++k) {
    if (predictions[k] == ds.labels[test[k]]) ++out.correct;
  }
  return out;
}

std::vector<std::size_t> complement(const std::vector<std::vector<std::size_t>>& folds,
                                    std::size_t skip) {
  std::vector<std::size_t> out;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    if (f != skip) out.insert(out.end(), folds[f].begin(), folds[f].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(ModelKind kind) {
  return kind == ModelKind::kVsGraph ? "vsgraph" : "graphhd";
}

ModelKind parse_model_kind(const std::string& text) {
  if (text == "vsgraph") return ModelKind::kVsGraph;
  if (text == "graphhd") return ModelKind::kGraphHD;
  throw std::invalid_argument("unknown model '" + text + "' (expected vsgraph or graphhd)");
}

SeedSpec fold_seed(std::uint64_t master_seed, std::size_t repeat) {
  return derive_stream(SeedSpec{master_seed, streams::kFolds}, repeat);
}

SeedSpec basis_seed(std::uint64_t master_seed, std::size_t repeat, std::size_t fold) {
  return derive_stream(SeedSpec{master_seed, streams::kBasis}, repeat, fold);
}

std::vector<std::vector<std::size_t>> stratified_kfold(std::span<const std::size_t> labels,
                                                       std::size_t k, const SeedSpec& seed) {
  if (k < 2) throw std::invalid_argument("stratified_kfold: need at least 2 folds");
  std::size_t num_classes = 0;
  for (const auto y : labels) num_classes = std::max(num_classes, y + 1);
  std::vector<std::vector<std::size_t>> members(num_classes);
  for (std::size_t i = 0; i < labels.size(); ++i) members[labels[i]].push_back(i);

  std::vector<std::vector<std::size_t>> folds(k);
  std::size_t next_fold = 0;
  for (std::size_t c = 0; c < num_classes; ++c) {
    auto& idx = members[c];
    if (idx.empty()) continue;
    if (idx.size() < k) {
      throw std::invalid_argument("stratified_kfold: class " + std::to_string(c) + " has " +
                                  std::to_string(idx.size()) + " members, fewer than " +
                                  std::to_string(k) + " folds");
    }
    // Fisher-Yates driven by the counter stream; draw position = step.
    for (std::size_t i = idx.size() - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(random_below(seed, c, i, i + 1));
      std::swap(idx[i], idx[j]);
    }
    // Round-robin continues where the previous class stopped so total fold
    // sizes stay balanced too.
    for (const auto i : idx) {
      folds[next_fold].push_back(i);
      next_fold = (next_fold + 1) % k;
    }
  }
  for (auto& f : folds) std::sort(f.begin(), f.end());
  return folds;
}

std::pair<double, double> mean_std(std::span<const double> values) {
  if (values.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double sq = 0.0;
  for (const double v : values) sq += (v - mean) * (v - mean);
  return {mean, std::sqrt(sq / n)};
}

CVReport run_cv(const GraphDataset& dataset, const CVConfig& config) {
  config.encoder.validate();
  if (config.folds < 2) throw std::invalid_argument("run_cv: folds must be >= 2");
  if (config.repeats < 1) throw std::invalid_argument("run_cv: repeats must be >= 1");
  if (dataset.graphs.size() != dataset.labels.size()) {
    throw std::invalid_argument("run_cv: dataset has mismatched graphs and labels");
  }

  const std::size_t dim = config.encoder.dim;
  const DatasetStats stats = dataset_stats(dataset);

  CVReport report;
  report.dataset = dataset.name;
  report.model = config.model;
  report.dim = dim;
  report.config = config;
  report.bytes_per_hypervector = BinaryHypervector::words_for(dim) * 8;
  if (config.model == ModelKind::kGraphHD) {
    for (const auto& g : dataset.graphs) report.edgeless_graphs += g.num_edges() == 0;
  }

  std::vector<std::vector<std::vector<std::size_t>>> splits;
  splits.reserve(config.repeats);
  for (std::size_t r = 0; r < config.repeats; ++r) {
    splits.push_back(stratified_kfold(dataset.labels, config.folds, fold_seed(config.master_seed, r)));
  }

  if (config.warmup) {
    const auto train = complement(splits[0], 0);
    run_fold(dataset, config, dim, basis_seed(config.master_seed, 0, 0), train, splits[0][0],
             stats.max_nodes);
  }

  std::vector<double> train_times;
  std::vector<double> infer_times;
  double setup_total = 0.0;
  std::size_t total_correct = 0;
  std::size_t total_tested = 0;
  for (std::size_t r = 0; r < config.repeats; ++r) {
    for (std::size_t f = 0; f < config.folds; ++f) {
      const auto& test = splits[r][f];
      const auto train = complement(splits[r], f);
      const FoldOutcome o = run_fold(dataset, config, dim, basis_seed(config.master_seed, r, f),
                                     train, test, stats.max_nodes);
      FoldResult row;
      row.repeat = r;
      row.fold = f;
      row.dim = dim;
      row.train_size = train.size();
      row.test_size = test.size();
      row.correct = o.correct;
      row.accuracy = static_cast<double>(o.correct) / static_cast<double>(test.size());
      row.train_ms_per_graph = o.train_ms / static_cast<double>(train.size());
      row.infer_ms_per_graph = o.infer_ms / static_cast<double>(test.size());
      report.folds.push_back(row);
      report.per_fold_accuracy.push_back(row.accuracy);
      train_times.push_back(row.train_ms_per_graph);
      infer_times.push_back(row.infer_ms_per_graph);
      setup_total += o.setup_ms;
      total_correct += o.correct;
      total_tested += test.size();
    }
  }

  std::tie(report.mean_accuracy, report.std_accuracy) = mean_std(report.per_fold_accuracy);
  report.weighted_accuracy = static_cast<double>(total_correct) / static_cast<double>(total_tested);
  report.train_ms_per_graph = {mean_std(train_times).first, median(train_times)};
  report.infer_ms_per_graph = {mean_std(infer_times).first, median(infer_times)};
  report.setup_ms_per_fold = setup_total / static_cast<double>(report.folds.size());
  return report;
}

SweepReport run_dim_sweep(const GraphDataset& dataset, const CVConfig& config) {
  if (config.dims.empty()) throw std::invalid_argument("run_dim_sweep: no dimensions given");
  SweepReport sweep;
  sweep.dataset = dataset.name;
  sweep.model = config.model;
  for (const auto dim : config.dims) {
    if (dim == 0) throw InvalidDimension("run_dim_sweep: dimension must be >= 1");
    CVConfig at = config;
    at.encoder.dim = dim;
    sweep.per_dim.push_back(run_cv(dataset, at));
  }
  return sweep;
}

GridReport run_grid_search(const GraphDataset& dataset, const CVConfig& config,
                           const GridSpec& grid) {
  config.encoder.validate();
  if (grid.hops.empty() || grid.layers.empty() || grid.alphas.empty()) {
    throw std::invalid_argument("run_grid_search: empty grid axis");
  }
  const auto t_start = Clock::now();
  const std::size_t dim = config.encoder.dim;
  const std::size_t max_layers = *std::max_element(grid.layers.begin(), grid.layers.end());
  const DatasetStats stats = dataset_stats(dataset);

  GridReport report;
  report.dataset = dataset.name;
  report.dim = dim;
  for (const auto k : grid.hops) {
    for (const auto l : grid.layers) {
      for (const auto a : grid.alphas) report.points.push_back({k, l, a, {}, 0.0, 0.0});
    }
  }
  auto point_index = [&](std::size_t ki, std::size_t li, std::size_t ai) {
    return (ki * grid.layers.size() + li) * grid.alphas.size() + ai;
  };

  for (std::size_t r = 0; r < config.repeats; ++r) {
    const auto folds =
        stratified_kfold(dataset.labels, config.folds, fold_seed(config.master_seed, r));
    for (std::size_t f = 0; f < config.folds; ++f) {
      const auto& test = folds[f];
      const auto train = complement(folds, f);
      const SeedSpec seed = basis_seed(config.master_seed, r, f);
      RankBasis basis(seed, dim);
      basis.reserve(stats.max_nodes);
      std::vector<std::size_t> train_labels;
      for (const auto i : train) train_labels.push_back(dataset.labels[i]);

      for (std::size_t ki = 0; ki < grid.hops.size(); ++ki) {
        for (std::size_t ai = 0; ai < grid.alphas.size(); ++ai) {
          EncoderConfig enc = config.encoder;
          enc.hops = grid.hops[ki];
          enc.alpha = grid.alphas[ai];
          enc.layers = max_layers;
          enc.seed = seed;
          enc.validate();
          std::vector<std::vector<GraphEmbedding<double>>> z(dataset.size());
          parallel_for(dataset.size(), config.workers, [&](std::size_t i) {
            z[i] = encode_graph_layers(dataset.graphs[i], enc, basis);
          });
          for (std::size_t li = 0; li < grid.layers.size(); ++li) {
            const std::size_t l = grid.layers[li];
            std::vector<GraphEmbedding<double>> train_z;
            train_z.reserve(train.size());
            for (const auto i : train) train_z.push_back(z[i][l]);
            enc.layers = l;
            const auto model = fit<double>(train_z, train_labels, dataset.num_classes, enc);
            std::size_t correct = 0;
            for (const auto i : test) correct += predict(model, z[i][l]) == dataset.labels[i];
            report.points[point_index(ki, li, ai)].per_fold_accuracy.push_back(
                static_cast<double>(correct) / static_cast<double>(test.size()));
          }
        }
      }
    }
  }

  for (std::size_t p = 0; p < report.points.size(); ++p) {
    auto& pt = report.points[p];
    std::tie(pt.mean_accuracy, pt.std_accuracy) = mean_std(pt.per_fold_accuracy);
    if (pt.mean_accuracy > report.points[report.best].mean_accuracy) report.best = p;
  }
  report.wall_seconds = elapsed_ms(t_start, Clock::now()) / 1000.0;
  return report;
}

}  // namespace vsgraph
