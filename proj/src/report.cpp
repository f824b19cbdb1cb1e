#include "vsgraph/report.hpp"

#include <charconv>
#include <ostream>

namespace vsgraph {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

CVConfig RunManifest::cv_config(ModelKind model) const {
  CVConfig c;
  c.folds = folds;
  c.repeats = repeats;
  c.master_seed = seed;
  c.model = model;
  c.encoder.dim = dim;
  c.encoder.hops = hops;
  c.encoder.layers = layers;
  c.encoder.alpha = alpha;
  c.encoder.seed = SeedSpec{seed, streams::kBasis};
  c.encoder.aggregation = parse_aggregation_mode(aggregation);
  c.dims = dims;
  c.workers = workers;
  return c;
}

nlohmann::json to_json(const RunManifest& m) {
  return {
      {"dataset_dir", m.dataset_dir},
      {"dataset_name", m.dataset_name},
      {"models", m.models},
      {"dim", m.dim},
      {"hops", m.hops},
      {"layers", m.layers},
      {"alpha", m.alpha},
      {"folds", m.folds},
      {"repeats", m.repeats},
      {"seed", m.seed},
      {"dims", m.dims},
      {"workers", m.workers},
      {"aggregation", m.aggregation},
      {"json_out", m.json_out},
      {"csv_out", m.csv_out},
      {"series_prefix", m.series_prefix},
      {"model_path", m.model_path},
      {"predictions_out", m.predictions_out},
  };
}

RunManifest manifest_from_json(const nlohmann::json& j, RunManifest m) {
  auto take = [&](const char* key, auto& field) {
    if (j.contains(key)) j.at(key).get_to(field);
  };
  take("dataset_dir", m.dataset_dir);
  take("dataset_name", m.dataset_name);
  take("models", m.models);
  take("dim", m.dim);
  take("hops", m.hops);
  take("layers", m.layers);
  take("alpha", m.alpha);
  take("folds", m.folds);
  take("repeats", m.repeats);
  take("seed", m.seed);
  take("dims", m.dims);
  take("workers", m.workers);
  take("aggregation", m.aggregation);
  take("json_out", m.json_out);
  take("csv_out", m.csv_out);
  take("series_prefix", m.series_prefix);
  take("model_path", m.model_path);
  take("predictions_out", m.predictions_out);
  return m;
}

nlohmann::json to_json(const CVReport& r) {
  nlohmann::json folds = nlohmann::json::array();
  for (const auto& f : r.folds) {
    folds.push_back({{"repeat", f.repeat},
                     {"fold", f.fold},
                     {"dim", f.dim},
                     {"train_size", f.train_size},
                     {"test_size", f.test_size},
                     {"correct", f.correct},
                     {"accuracy", f.accuracy},
                     {"train_ms_per_graph", f.train_ms_per_graph},
                     {"infer_ms_per_graph", f.infer_ms_per_graph}});
  }
  const auto& c = r.config;
  return {
      {"format", kReportFormat},
      {"dataset", r.dataset},
      {"model", to_string(r.model)},
      {"dim", r.dim},
      {"config",
       {{"folds", c.folds},
        {"repeats", c.repeats},
        {"master_seed", c.master_seed},
        {"hops", c.encoder.hops},
        {"layers", c.encoder.layers},
        {"alpha", c.encoder.alpha},
        {"aggregation", to_string(c.encoder.aggregation)},
        {"workers", c.workers},
        {"warmup", c.warmup}}},
      {"per_fold_accuracy", r.per_fold_accuracy},
      {"mean_accuracy", r.mean_accuracy},
      {"std_accuracy", r.std_accuracy},
      {"weighted_accuracy", r.weighted_accuracy},
      {"train_ms_per_graph", {{"mean", r.train_ms_per_graph.mean}, {"median", r.train_ms_per_graph.median}}},
      {"infer_ms_per_graph", {{"mean", r.infer_ms_per_graph.mean}, {"median", r.infer_ms_per_graph.median}}},
      {"setup_ms_per_fold", r.setup_ms_per_fold},
      {"bytes_per_hypervector", r.bytes_per_hypervector},
      {"edgeless_graphs", r.edgeless_graphs},
      {"folds", folds},
  };
}

nlohmann::json to_json(const SweepReport& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.per_dim) rows.push_back(to_json(r));
  return {{"format", kReportFormat},
          {"dataset", s.dataset},
          {"model", to_string(s.model)},
          {"per_dim", rows}};
}

void write_fold_csv(std::ostream& out, std::span<const CVReport> reports) {
  out << kFoldCsvHeader << '\n';
  for (const auto& r : reports) {
    for (const auto& f : r.folds) {
      out << r.dataset << ',' << to_string(r.model) << ',' << f.dim << ',' << f.repeat << ','
          << f.fold << ',' << f.train_size << ',' << f.test_size << ',' << f.correct << ','
          << format_double(f.accuracy) << ',' << format_double(f.train_ms_per_graph) << ','
          << format_double(f.infer_ms_per_graph) << '\n';
    }
  }
}

void write_series(std::ostream& out, const SweepReport& sweep) {
  out << "# " << sweep.dataset << ' ' << to_string(sweep.model) << "\n# dim mean_accuracy\n";
  for (const auto& r : sweep.per_dim) out << r.dim << ' ' << format_double(r.mean_accuracy) << '\n';
}

}  // namespace vsgraph
