#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "vsgraph/errors.hpp"
#include "vsgraph/model_io.hpp"
#include "vsgraph/report.hpp"

using namespace vsgraph;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("vsgraph_io_" + name);
}

SavedModel sample_vsgraph() {
  SavedModel m;
  m.kind = ModelKind::kVsGraph;
  m.config.dim = 70;
  m.config.alpha = 0.3;
  m.config.hops = 3;
  m.config.layers = 1;
  m.config.seed = {9, streams::kBasis};
  m.config.aggregation = AggregationMode::kBinarizeOr;
  m.raw_labels = {-1, 1, 7};
  m.vsgraph.config = m.config;
  m.vsgraph.prototypes = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>::Random(3, 70);
  return m;
}

}  // namespace

TEST(ModelIo, VsGraphRoundTrip) {
  const auto path = temp_file("vs.bin");
  const auto m = sample_vsgraph();
  save_model(path, m);
  const auto back = load_model(path);
  EXPECT_EQ(back.kind, ModelKind::kVsGraph);
  EXPECT_EQ(back.config.dim, 70u);
  EXPECT_EQ(back.config.alpha, 0.3);
  EXPECT_EQ(back.config.hops, 3u);
  EXPECT_EQ(back.config.layers, 1u);
  EXPECT_EQ(back.config.seed, m.config.seed);
  EXPECT_EQ(back.config.aggregation, AggregationMode::kBinarizeOr);
  EXPECT_EQ(back.raw_labels, m.raw_labels);
  EXPECT_EQ(back.vsgraph.prototypes, m.vsgraph.prototypes);
  EXPECT_EQ(fs::file_size(path), 80u + 3 * 8 + 3 * 70 * 8);
  EXPECT_TRUE(fs::exists(sidecar_path(path)));
  fs::remove(path);
  fs::remove(sidecar_path(path));
}

TEST(ModelIo, GraphHDRoundTrip) {
  const auto path = temp_file("ghd.bin");
  SavedModel m;
  m.kind = ModelKind::kGraphHD;
  m.config.dim = 130;
  m.config.seed = {4, streams::kBasis};
  m.raw_labels = {0, 1};
  m.graphhd = {{random_hypervector(m.config.seed, 0, 130), random_hypervector(m.config.seed, 1, 130)},
               130,
               m.config.seed};
  save_model(path, m);
  const auto back = load_model(path);
  EXPECT_EQ(back.kind, ModelKind::kGraphHD);
  EXPECT_EQ(back.graphhd.prototypes, m.graphhd.prototypes);
  EXPECT_EQ(back.graphhd.dim, 130u);
  fs::remove(path);
  fs::remove(sidecar_path(path));
}

TEST(ModelIo, RejectsBadFiles) {
  const auto path = temp_file("bad.bin");
  save_model(path, sample_vsgraph());
  std::string bytes;
  {
    std::ifstream in(path, std::ios::binary);
    bytes.assign(std::istreambuf_iterator<char>(in), {});
  }
  auto write = [&](const std::string& b) { std::ofstream(path, std::ios::binary) << b; };

  std::string wrong_version = bytes;
  wrong_version[8] = 2;
  write(wrong_version);
  try {
    load_model(path);
    FAIL() << "expected FormatVersionError";
  } catch (const FormatVersionError& e) {
    EXPECT_NE(std::string(e.what()).find("version 2"), std::string::npos);
  }

  write(bytes.substr(0, bytes.size() - 8));
  EXPECT_THROW(load_model(path), FormatVersionError);
  write("not a model at all");
  EXPECT_THROW(load_model(path), FormatVersionError);
  fs::remove(path);
  fs::remove(sidecar_path(path));
  EXPECT_THROW(load_model(path), IoError);
}

TEST(Report, ManifestRoundTrip) {
  RunManifest m;
  m.dataset_name = "MUTAG";
  m.models = {"vsgraph", "graphhd"};
  m.dim = 1024;
  m.alpha = 0.7;
  m.dims = {128, 256};
  m.aggregation = "binarize-or";
  const auto back = manifest_from_json(to_json(m));
  EXPECT_EQ(to_json(back), to_json(m));

  RunManifest base;
  base.dim = 64;
  const auto partial = manifest_from_json(nlohmann::json{{"hops", 3}}, base);
  EXPECT_EQ(partial.dim, 64u);
  EXPECT_EQ(partial.hops, 3u);
  EXPECT_EQ(m.cv_config(ModelKind::kGraphHD).encoder.aggregation, AggregationMode::kBinarizeOr);
}

TEST(Report, CsvAndSeries) {
  CVReport r;
  r.dataset = "D";
  r.model = ModelKind::kGraphHD;
  r.dim = 128;
  r.mean_accuracy = 0.75;
  r.folds.push_back({0, 1, 128, 9, 1, 1, 1.0, 0.5, 0.25});
  std::ostringstream csv;
  write_fold_csv(csv, std::span<const CVReport>(&r, 1));
  EXPECT_EQ(csv.str(), std::string(kFoldCsvHeader) + "\nD,graphhd,128,0,1,9,1,1,1,0.5,0.25\n");

  SweepReport s{"D", ModelKind::kGraphHD, {r}};
  std::ostringstream series;
  write_series(series, s);
  EXPECT_EQ(series.str(), "# D graphhd\n# dim mean_accuracy\n128 0.75\n");
  EXPECT_EQ(format_double(0.1), "0.1");
}
