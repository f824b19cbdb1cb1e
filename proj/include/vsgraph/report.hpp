#pragma once

// Run manifests and CV report serialization (JSON + CSV + plot series).
// Column layouts and JSON keys are documented in docs/FORMATS.md.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "vsgraph/cross_validation.hpp"

namespace vsgraph {

inline constexpr const char* kReportFormat = "vsgraph-report/1";

/// Column header of the per-fold CSV.
inline constexpr const char* kFoldCsvHeader =
    "dataset,model,dim,repeat,fold,train_size,test_size,correct,accuracy,"
    "train_ms_per_graph,infer_ms_per_graph";

/// Everything needed to reproduce a CLI run.
struct RunManifest {
  std::string dataset_dir;
  std::string dataset_name;
  std::vector<std::string> models{"vsgraph"};
  std::size_t dim = 8192;
  std::size_t hops = 2;
  std::size_t layers = 2;
  double alpha = 0.5;
  std::size_t folds = 10;
  std::size_t repeats = 3;
  std::uint64_t seed = 0;
  std::vector<std::size_t> dims;
  std::size_t workers = 1;
  std::string aggregation = "max";
  std::string json_out;
  std::string csv_out;
  std::string series_prefix;
  std::string model_path;
  std::string predictions_out;

  /// Encoder and CV settings for one model.
  [[nodiscard]] CVConfig cv_config(ModelKind model) const;
};

nlohmann::json to_json(const RunManifest& m);
/// Missing keys keep the values already in `base`.
RunManifest manifest_from_json(const nlohmann::json& j, RunManifest base = {});

nlohmann::json to_json(const CVReport& r);
nlohmann::json to_json(const SweepReport& s);

/// Writes the header line then one row per fold.
void write_fold_csv(std::ostream& out, std::span<const CVReport> reports);

/// Gnuplot-friendly "D mean_accuracy" lines with a '#' header.
void write_series(std::ostream& out, const SweepReport& sweep);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace vsgraph
