// vsgraph command-line driver.
//
// Settings come from three layers, later ones winning: built-in defaults,
// a JSON manifest given with --config, then explicit flags.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "vsgraph/classifier.hpp"
#include "vsgraph/cross_validation.hpp"
#include "vsgraph/graphhd.hpp"
#include "vsgraph/model_io.hpp"
#include "vsgraph/report.hpp"

namespace fs = std::filesystem;
using namespace vsgraph;

namespace {

constexpr const char* kDataRootEnv = "VSGRAPH_DATA_ROOT";

struct Flags {
  std::string config;
  std::string dataset;
  std::string data_dir;
  std::string model;
  std::string models;
  std::size_t dim = 0;
  std::size_t hops = 0;
  std::size_t layers = 0;
  double alpha = 0.0;
  std::size_t folds = 0;
  std::size_t repeats = 0;
  std::uint64_t seed = 0;
  std::string dims;
  std::size_t workers = 0;
  std::string aggregation;
  std::string json_out;
  std::string csv_out;
  std::string series_prefix;
  std::string model_path;
  std::string predictions_out;
};

struct Options {
  CLI::Option* config = nullptr;
  std::vector<std::pair<CLI::Option*, std::string>> named;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void add_common(CLI::App* cmd, Flags& f, Options& o) {
  auto add = [&](CLI::Option* opt, const char* key) { o.named.emplace_back(opt, key); };
  cmd->add_option("--config", f.config, "JSON run manifest; flags override its values");
  add(cmd->add_option("--dataset", f.dataset, "Dataset name (file prefix)"), "dataset_name");
  add(cmd->add_option("--data-dir", f.data_dir,
                      std::string("Dataset directory (default: $") + kDataRootEnv + "/<name>)"),
      "dataset_dir");
  add(cmd->add_option("--dim", f.dim, "Hypervector dimension D"), "dim");
  add(cmd->add_option("--hops", f.hops, "Spike diffusion hops K"), "hops");
  add(cmd->add_option("--layers", f.layers, "Message-passing layers L"), "layers");
  add(cmd->add_option("--alpha", f.alpha, "Blend factor alpha in [0,1]"), "alpha");
  add(cmd->add_option("--seed", f.seed, "Master seed"), "seed");
  add(cmd->add_option("--workers", f.workers, "Worker threads (1 = reference timing)"),
      "workers");
  add(cmd->add_option("--aggregation", f.aggregation, "max | binarize-or"), "aggregation");
}

void add_cv_flags(CLI::App* cmd, Flags& f, Options& o) {
  auto add = [&](CLI::Option* opt, const char* key) { o.named.emplace_back(opt, key); };
  add(cmd->add_option("--folds", f.folds, "Cross-validation folds k"), "folds");
  add(cmd->add_option("--repeats", f.repeats, "Cross-validation repeats R"), "repeats");
  add(cmd->add_option("--json", f.json_out, "JSON report path"), "json_out");
  add(cmd->add_option("--csv", f.csv_out, "Per-fold CSV path"), "csv_out");
}

RunManifest resolve(const Flags& f, const Options& o) {
  RunManifest m;
  m.workers = std::max(1u, std::thread::hardware_concurrency());
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw IoError(f.config, "cannot open config file");
    m = manifest_from_json(nlohmann::json::parse(in), m);
  }
  for (const auto& [opt, key] : o.named) {
    if (opt->count() == 0) continue;
    if (key == "dataset_name") m.dataset_name = f.dataset;
    else if (key == "dataset_dir") m.dataset_dir = f.data_dir;
    else if (key == "model") m.models = {f.model};
    else if (key == "models") m.models = split_list(f.models);
    else if (key == "dim") m.dim = f.dim;
    else if (key == "hops") m.hops = f.hops;
    else if (key == "layers") m.layers = f.layers;
    else if (key == "alpha") m.alpha = f.alpha;
    else if (key == "folds") m.folds = f.folds;
    else if (key == "repeats") m.repeats = f.repeats;
    else if (key == "seed") m.seed = f.seed;
    else if (key == "workers") m.workers = f.workers;
    else if (key == "aggregation") m.aggregation = f.aggregation;
    else if (key == "json_out") m.json_out = f.json_out;
    else if (key == "csv_out") m.csv_out = f.csv_out;
    else if (key == "series_prefix") m.series_prefix = f.series_prefix;
    else if (key == "model_path") m.model_path = f.model_path;
    else if (key == "predictions_out") m.predictions_out = f.predictions_out;
    else if (key == "dims") {
      m.dims.clear();
      for (const auto& d : split_list(f.dims)) m.dims.push_back(std::stoul(d));
    }
  }
  if (m.dataset_name.empty()) throw std::invalid_argument("no dataset given (use --dataset)");
  if (m.dataset_dir.empty()) {
    const char* root = std::getenv(kDataRootEnv);
    m.dataset_dir = (fs::path(root ? root : ".") / m.dataset_name).string();
  }
  parse_aggregation_mode(m.aggregation);
  for (const auto& name : m.models) parse_model_kind(name);
  return m;
}

GraphDataset load_dataset(const RunManifest& m) {
  if (!fs::is_directory(m.dataset_dir)) {
    throw IoError(m.dataset_dir, "dataset directory not found");
  }
  return parse_tudataset(m.dataset_dir, m.dataset_name);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path, "cannot open for writing");
  return out;
}

void print_summary_header() {
  std::cout << std::left << std::setw(12) << "dataset" << std::setw(10) << "model"
            << std::right << std::setw(7) << "D" << std::setw(18) << "accuracy" << std::setw(14)
            << "train ms/g" << std::setw(14) << "infer ms/g" << '\n';
}

void print_summary_row(const CVReport& r) {
  std::ostringstream acc;
  acc << std::fixed << std::setprecision(2) << 100.0 * r.mean_accuracy << " +- "
      << 100.0 * r.std_accuracy;
  std::cout << std::left << std::setw(12) << r.dataset << std::setw(10) << to_string(r.model)
            << std::right << std::setw(7) << r.dim << std::setw(18) << acc.str() << std::fixed
            << std::setprecision(4) << std::setw(14) << r.train_ms_per_graph.mean
            << std::setw(14) << r.infer_ms_per_graph.mean << '\n';
}

nlohmann::json with_manifest(nlohmann::json doc, const RunManifest& m) {
  doc["manifest"] = to_json(m);
  return doc;
}

int cmd_cv(const RunManifest& m) {
  const GraphDataset ds = load_dataset(m);
  std::vector<CVReport> reports;
  for (const auto& name : m.models) reports.push_back(run_cv(ds, m.cv_config(parse_model_kind(name))));

  print_summary_header();
  for (const auto& r : reports) print_summary_row(r);

  if (!m.json_out.empty()) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : reports) runs.push_back(to_json(r));
    open_out(m.json_out) << with_manifest({{"format", kReportFormat}, {"runs", runs}}, m).dump(2)
                         << '\n';
  }
  if (!m.csv_out.empty()) {
    auto out = open_out(m.csv_out);
    write_fold_csv(out, reports);
  }
  return 0;
}

int cmd_sweep(const RunManifest& m) {
  if (m.dims.empty()) throw std::invalid_argument("sweep needs --dims");
  const GraphDataset ds = load_dataset(m);
  std::vector<SweepReport> sweeps;
  for (const auto& name : m.models) {
    sweeps.push_back(run_dim_sweep(ds, m.cv_config(parse_model_kind(name))));
  }

  print_summary_header();
  std::vector<CVReport> flat;
  for (const auto& s : sweeps) {
    for (const auto& r : s.per_dim) {
      print_summary_row(r);
      flat.push_back(r);
    }
  }

  if (!m.json_out.empty()) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& s : sweeps) runs.push_back(to_json(s));
    open_out(m.json_out) << with_manifest({{"format", kReportFormat}, {"sweeps", runs}}, m).dump(2)
                         << '\n';
  }
  if (!m.csv_out.empty()) {
    auto out = open_out(m.csv_out);
    write_fold_csv(out, flat);
  }
  const std::string prefix = m.series_prefix.empty() ? m.dataset_name : m.series_prefix;
  for (const auto& s : sweeps) {
    auto out = open_out(prefix + "_" + to_string(s.model) + ".dat");
    write_series(out, s);
  }
  return 0;
}

int cmd_train(const RunManifest& m) {
  if (m.model_path.empty()) throw std::invalid_argument("train needs --out <model file>");
  if (m.models.size() != 1) throw std::invalid_argument("train takes exactly one --model");
  const GraphDataset ds = load_dataset(m);
  const ModelKind kind = parse_model_kind(m.models.front());
  const CVConfig cfg = m.cv_config(kind);
  cfg.encoder.validate();

  RankBasis basis(cfg.encoder.seed, cfg.encoder.dim);
  basis.reserve(dataset_stats(ds).max_nodes);
  SavedModel saved;
  saved.kind = kind;
  saved.config = cfg.encoder;
  saved.raw_labels = ds.raw_labels;
  if (kind == ModelKind::kVsGraph) {
    std::vector<GraphEmbedding<double>> z;
    z.reserve(ds.size());
    for (const auto& g : ds.graphs) z.push_back(encode_graph(g, cfg.encoder, basis));
    saved.vsgraph = fit<double>(z, ds.labels, ds.num_classes, cfg.encoder);
  } else {
    saved.graphhd = fit_graphhd(ds.graphs, ds.labels, basis, ds.num_classes);
  }
  save_model(m.model_path, saved, with_manifest(nlohmann::json::object(), m));
  std::cout << "trained " << to_string(kind) << " on " << ds.size() << " graphs, "
            << ds.num_classes << " classes, D=" << cfg.encoder.dim << " -> " << m.model_path
            << '\n';
  return 0;
}

int cmd_predict(const RunManifest& m, bool dim_given) {
  if (m.model_path.empty()) throw std::invalid_argument("predict needs --model-file");
  if (m.predictions_out.empty()) throw std::invalid_argument("predict needs --out <csv>");
  const SavedModel saved = load_model(m.model_path);
  if (dim_given && m.dim != saved.config.dim) {
    throw FormatVersionError(m.model_path + ": model dimension " +
                             std::to_string(saved.config.dim) + " differs from requested " +
                             std::to_string(m.dim));
  }
  const GraphDataset ds = load_dataset(m);
  RankBasis basis(saved.config.seed, saved.config.dim);
  basis.reserve(dataset_stats(ds).max_nodes);

  auto out = open_out(m.predictions_out);
  out << "graph,predicted_class,predicted_label,true_label";
  for (std::size_t c = 0; c < saved.raw_labels.size(); ++c) out << ",score_" << c;
  out << '\n';
  std::size_t correct = 0;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    std::vector<double> scores;
    std::size_t predicted = 0;
    if (saved.kind == ModelKind::kVsGraph) {
      const auto z = encode_graph(ds.graphs[i], saved.config, basis);
      const auto s = predict_scores(saved.vsgraph, z);
      scores.assign(s.data(), s.data() + s.size());
      predicted = predict(saved.vsgraph, z);
    } else {
      const auto g = encode_graphhd(ds.graphs[i], basis);
      scores = predict_graphhd_scores(saved.graphhd, g);
      predicted = predict_graphhd(saved.graphhd, g);
    }
    const std::int64_t label = saved.raw_labels[predicted];
    const std::int64_t truth = ds.raw_labels[ds.labels[i]];
    correct += label == truth;
    out << i << ',' << predicted << ',' << label << ',' << truth;
    for (const double s : scores) out << ',' << format_double(s);
    out << '\n';
  }
  std::cout << "predicted " << ds.size() << " graphs, accuracy against file labels "
            << std::fixed << std::setprecision(4)
            << static_cast<double>(correct) / static_cast<double>(ds.size()) << '\n';
  return 0;
}

int cmd_validate(const RunManifest& m) {
  const GraphDataset ds = load_dataset(m);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (const auto problem = check_invariants(ds.graphs[i]); !problem.empty()) {
      throw FormatError(m.dataset_dir, 0, "graph " + std::to_string(i + 1) + ": " + problem);
    }
  }
  const DatasetStats s = dataset_stats(ds);
  std::cout << "dataset      " << ds.name << '\n'
            << "graphs       " << s.num_graphs << '\n'
            << "classes      " << s.num_classes << '\n'
            << std::fixed << std::setprecision(2) << "avg nodes    " << s.mean_nodes << '\n'
            << "avg edges    " << s.mean_edges << '\n'
            << "max nodes    " << s.max_nodes << '\n';
  for (std::size_t c = 0; c < s.num_classes; ++c) {
    std::cout << "class " << c << " (label " << ds.raw_labels[c] << ")  " << s.class_counts[c]
              << " graphs\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector-symbolic graph classification: VS-Graph and GraphHD"};
  app.require_subcommand(1);

  Flags f;
  Options cv_o, sweep_o, train_o, predict_o, validate_o;

  auto* cv = app.add_subcommand("cv", "Stratified repeated k-fold cross-validation");
  add_common(cv, f, cv_o);
  add_cv_flags(cv, f, cv_o);
  cv_o.named.emplace_back(cv->add_option("--model", f.model, "vsgraph | graphhd"), "model");
  cv_o.named.emplace_back(cv->add_option("--models", f.models, "Comma-separated model list"),
                          "models");

  auto* sweep = app.add_subcommand("sweep", "Cross-validation across hypervector dimensions");
  add_common(sweep, f, sweep_o);
  add_cv_flags(sweep, f, sweep_o);
  sweep_o.named.emplace_back(sweep->add_option("--dims", f.dims, "Comma-separated D values"),
                             "dims");
  sweep_o.named.emplace_back(sweep->add_option("--model", f.model, "vsgraph | graphhd"), "model");
  sweep_o.named.emplace_back(
      sweep->add_option("--models", f.models, "Comma-separated model list"), "models");
  sweep_o.named.emplace_back(
      sweep->add_option("--series-prefix", f.series_prefix,
                        "Series files are written to <prefix>_<model>.dat"),
      "series_prefix");

  auto* train = app.add_subcommand("train", "Fit a model on a whole dataset and save it");
  add_common(train, f, train_o);
  train_o.named.emplace_back(train->add_option("--model", f.model, "vsgraph | graphhd"), "model");
  train_o.named.emplace_back(train->add_option("--out", f.model_path, "Model file to write"),
                             "model_path");

  auto* pred = app.add_subcommand("predict", "Classify a dataset with a saved model");
  add_common(pred, f, predict_o);
  predict_o.named.emplace_back(pred->add_option("--model-file", f.model_path, "Saved model"),
                               "model_path");
  predict_o.named.emplace_back(
      pred->add_option("--out", f.predictions_out, "Predictions CSV to write"), "predictions_out");

  auto* validate = app.add_subcommand("validate-dataset", "Parse a dataset and print statistics");
  add_common(validate, f, validate_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (cv->parsed()) return cmd_cv(resolve(f, cv_o));
    if (sweep->parsed()) return cmd_sweep(resolve(f, sweep_o));
    if (train->parsed()) return cmd_train(resolve(f, train_o));
    if (pred->parsed()) {
      const bool dim_given = pred->get_option("--dim")->count() > 0;
      RunManifest m = resolve(f, predict_o);
      return cmd_predict(m, dim_given || (!f.config.empty() && m.dim != RunManifest{}.dim));
    }
    if (validate->parsed()) return cmd_validate(resolve(f, validate_o));
  } catch (const std::exception& e) {
    std::cerr << "vsgraph: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
