#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vsgraph/random.hpp"

namespace vsgraph {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Undirected simple graph in CSR form. Neighbor lists are sorted ascending,
/// symmetric, free of self-loops and duplicates. Immutable once built.
class Graph {
 public:
  Graph() = default;

  [[nodiscard]] std::size_t num_nodes() const noexcept {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  [[nodiscard]] std::size_t num_edges() const noexcept { return neighbors_.size() / 2; }
  [[nodiscard]] std::span<const NodeId> neighbors(std::size_t node) const noexcept {
    return std::span<const NodeId>(neighbors_).subspan(offsets_[node],
                                                       offsets_[node + 1] - offsets_[node]);
  }
  [[nodiscard]] std::size_t degree(std::size_t node) const noexcept {
    return offsets_[node + 1] - offsets_[node];
  }
  [[nodiscard]] std::span<const std::size_t> csr_offsets() const noexcept { return offsets_; }
  [[nodiscard]] std::span<const NodeId> csr_neighbors() const noexcept { return neighbors_; }

  /// Each undirected edge once, as (i, j) with i < j, in ascending order.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph make_graph(std::size_t, std::span<const Edge>);

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
};

/// Canonical graph: symmetrized, deduplicated, self-loops dropped, neighbor
/// lists sorted. Throws std::invalid_argument for num_nodes == 0 or an
/// endpoint >= num_nodes.
Graph make_graph(std::size_t num_nodes, std::span<const Edge> edges);

inline Graph make_graph(std::size_t num_nodes, std::initializer_list<Edge> edges) {
  return make_graph(num_nodes, std::span<const Edge>(edges.begin(), edges.size()));
}

/// G(n, p): each unordered pair is an edge with probability p, drawn from the
/// counter stream of `seed`. Throws std::invalid_argument for p outside [0,1]
/// or num_nodes == 0.
Graph random_graph(const SeedSpec& seed, std::size_t num_nodes, double edge_prob);

/// Relabels node i as perm[i].
Graph permute_nodes(const Graph& g, std::span<const NodeId> perm);

/// Empty string when every CSR invariant holds, otherwise the first violation.
std::string check_invariants(const Graph& g);

/// Labeled collection of graphs. Labels are dense class indices.
struct GraphDataset {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<std::size_t> labels;
  std::size_t num_classes = 0;
  /// Original label token for each class index, in ascending numeric order.
  std::vector<std::int64_t> raw_labels;

  [[nodiscard]] std::size_t size() const noexcept { return graphs.size(); }
};

struct DatasetStats {
  std::size_t num_graphs = 0;
  std::size_t num_classes = 0;
  double mean_nodes = 0.0;
  double mean_edges = 0.0;
  std::size_t max_nodes = 0;
  std::vector<std::size_t> class_counts;
};

DatasetStats dataset_stats(const GraphDataset& ds);

/// Loads `<dir>/<name>_A.txt`, `_graph_indicator.txt` and `_graph_labels.txt`.
/// Attribute and label files for nodes and edges are ignored.
GraphDataset parse_tudataset(const std::filesystem::path& directory, const std::string& name);

}  // namespace vsgraph
