// TUDataset flat-file reader.
//
// <name>_A.txt             one "row, col" pair per line, 1-based global node ids
// <name>_graph_indicator   line i holds the 1-based graph id of node i
// <name>_graph_labels      line k holds the raw label of graph k
//
// Tokens may be separated by commas and/or whitespace. Blank lines are skipped
// but still counted for error line numbers.

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <string_view>

#include "vsgraph/errors.hpp"
#include "vsgraph/graph.hpp"

namespace vsgraph {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::int64_t> values;
};

std::vector<Line> read_integer_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open file");
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    Line line{number, {}};
    std::string_view rest(text);
    while (!rest.empty()) {
      const auto start = rest.find_first_not_of(" \t\r,");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto stop = std::min(rest.find_first_of(" \t\r,"), rest.size());
      const std::string_view token = rest.substr(0, stop);
      std::int64_t value = 0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw FormatError(path.string(), number,
                          "expected an integer, found '" + std::string(token) + "'");
      }
      line.values.push_back(value);
      rest.remove_prefix(stop);
    }
    if (!line.values.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

std::filesystem::path dataset_file(const std::filesystem::path& dir, const std::string& name,
                                   const char* suffix) {
  auto path = dir / (name + suffix);
  if (!std::filesystem::exists(path)) throw IoError(path.string(), "file not found");
  return path;
}

}  // namespace

GraphDataset parse_tudataset(const std::filesystem::path& directory, const std::string& name) {
  const auto adjacency_path = dataset_file(directory, name, "_A.txt");
  const auto indicator_path = dataset_file(directory, name, "_graph_indicator.txt");
  const auto labels_path = dataset_file(directory, name, "_graph_labels.txt");

  const auto label_lines = read_integer_lines(labels_path);
  const std::size_t num_graphs = label_lines.size();
  if (num_graphs == 0) throw FormatError(labels_path.string(), 0, "no graph labels");

  std::vector<std::int64_t> raw(num_graphs);
  for (std::size_t k = 0; k < num_graphs; ++k) {
    if (label_lines[k].values.size() != 1) {
      throw FormatError(labels_path.string(), label_lines[k].number, "expected one label");
    }
    raw[k] = label_lines[k].values[0];
  }

  // Global node id (0-based) -> (graph, local index).
  const auto indicator_lines = read_integer_lines(indicator_path);
  std::vector<std::size_t> node_graph(indicator_lines.size());
  std::vector<NodeId> node_local(indicator_lines.size());
  std::vector<std::size_t> graph_sizes(num_graphs, 0);
  for (std::size_t i = 0; i < indicator_lines.size(); ++i) {
    const auto& line = indicator_lines[i];
    if (line.number != i + 1) {
      throw FormatError(indicator_path.string(), i + 1, "blank line inside the node list");
    }
    if (line.values.size() != 1) {
      throw FormatError(indicator_path.string(), line.number, "expected one graph id");
    }
    const std::int64_t gid = line.values[0];
    if (gid < 1 || static_cast<std::uint64_t>(gid) > num_graphs) {
      throw FormatError(indicator_path.string(), line.number,
                        "graph id " + std::to_string(gid) + " outside 1.." +
                            std::to_string(num_graphs));
    }
    const auto g = static_cast<std::size_t>(gid - 1);
    node_graph[i] = g;
    node_local[i] = static_cast<NodeId>(graph_sizes[g]++);
  }

  std::vector<std::vector<Edge>> graph_edges(num_graphs);
  for (const auto& line : read_integer_lines(adjacency_path)) {
    if (line.values.size() != 2) {
      throw FormatError(adjacency_path.string(), line.number, "expected two node ids");
    }
    std::size_t ends[2];
    for (int e = 0; e < 2; ++e) {
      const std::int64_t id = line.values[static_cast<std::size_t>(e)];
      if (id < 1 || static_cast<std::uint64_t>(id) > node_graph.size()) {
        throw FormatError(adjacency_path.string(), line.number,
                          "node " + std::to_string(id) + " is not listed in " +
                              indicator_path.filename().string());
      }
      ends[e] = static_cast<std::size_t>(id - 1);
    }
    const std::size_t g = node_graph[ends[0]];
    if (node_graph[ends[1]] != g) {
      throw FormatError(adjacency_path.string(), line.number, "edge joins two different graphs");
    }
    graph_edges[g].emplace_back(node_local[ends[0]], node_local[ends[1]]);
  }

  GraphDataset ds;
  ds.name = name;
  ds.graphs.reserve(num_graphs);
  for (std::size_t g = 0; g < num_graphs; ++g) {
    if (graph_sizes[g] == 0) {
      throw FormatError(indicator_path.string(), 0,
                        "graph " + std::to_string(g + 1) + " has no nodes");
    }
    ds.graphs.push_back(make_graph(graph_sizes[g], graph_edges[g]));
  }

  std::map<std::int64_t, std::size_t> classes;
  for (const auto r : raw) classes.emplace(r, 0);
  for (auto& [r, idx] : classes) {
    idx = ds.raw_labels.size();
    ds.raw_labels.push_back(r);
  }
  ds.num_classes = classes.size();
  ds.labels.reserve(num_graphs);
  for (const auto r : raw) ds.labels.push_back(classes.at(r));
  return ds;
}

}  // namespace vsgraph
