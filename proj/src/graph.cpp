#include "vsgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace vsgraph {

Graph make_graph(std::size_t num_nodes, std::span<const Edge> edges) {
  if (num_nodes == 0) throw std::invalid_argument("make_graph: graph needs at least one node");

  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    if (a >= num_nodes || b >= num_nodes) {
      throw std::invalid_argument("make_graph: edge (" + std::to_string(a) + ", " +
                                  std::to_string(b) + ") out of range for " +
                                  std::to_string(num_nodes) + " nodes");
    }
    if (a == b) continue;
    directed.emplace_back(a, b);
    directed.emplace_back(b, a);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(num_nodes + 1, 0);
  for (const auto& e : directed) ++g.offsets_[e.first + 1];
  for (std::size_t i = 0; i < num_nodes; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.neighbors_.reserve(directed.size());
  for (const auto& e : directed) g.neighbors_.push_back(e.second);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (std::size_t i = 0; i < num_nodes(); ++i) {
    for (const NodeId j : neighbors(i)) {
      if (i < j) out.emplace_back(static_cast<NodeId>(i), j);
    }
  }
  return out;
}

Graph random_graph(const SeedSpec& seed, std::size_t num_nodes, double edge_prob) {
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
    throw std::invalid_argument("random_graph: edge probability must lie in [0, 1]");
  }
  if (num_nodes == 0) throw std::invalid_argument("random_graph: graph needs at least one node");
  std::vector<Edge> edges;
  std::uint64_t pair = 0;
  for (std::size_t i = 0; i < num_nodes; ++i) {
    for (std::size_t j = i + 1; j < num_nodes; ++j, ++pair) {
      if (random_unit(seed, 0, pair) < edge_prob) {
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
  }
  return make_graph(num_nodes, edges);
}

Graph permute_nodes(const Graph& g, std::span<const NodeId> perm) {
  if (perm.size() != g.num_nodes()) {
    throw std::invalid_argument("permute_nodes: permutation size does not match node count");
  }
  auto edges = g.edges();
  for (auto& [a, b] : edges) {
    a = perm[a];
    b = perm[b];
  }
  return make_graph(g.num_nodes(), edges);
}

std::string check_invariants(const Graph& g) {
  const auto offsets = g.csr_offsets();
  const auto nbrs = g.csr_neighbors();
  const std::size_t n = g.num_nodes();
  if (n == 0) return "graph has no nodes";
  if (offsets.front() != 0) return "offsets do not start at 0";
  for (std::size_t i = 0; i < n; ++i) {
    if (offsets[i] > offsets[i + 1]) return "offsets decrease at node " + std::to_string(i);
  }
  if (offsets[n] != nbrs.size()) return "last offset does not match neighbor array length";
  if (offsets[n] != 2 * g.num_edges()) return "last offset is not twice the edge count";
  for (std::size_t i = 0; i < n; ++i) {
    const auto list = g.neighbors(i);
    for (std::size_t k = 0; k < list.size(); ++k) {
      const NodeId j = list[k];
      if (j >= n) return "neighbor out of range at node " + std::to_string(i);
      if (j == i) return "self-loop at node " + std::to_string(i);
      if (k > 0 && list[k - 1] >= j) {
        return "neighbor list of node " + std::to_string(i) + " not strictly ascending";
      }
      const auto back = g.neighbors(j);
      if (!std::binary_search(back.begin(), back.end(), static_cast<NodeId>(i))) {
        return "edge " + std::to_string(i) + "->" + std::to_string(j) + " has no reverse";
      }
    }
  }
  return {};
}

DatasetStats dataset_stats(const GraphDataset& ds) {
  DatasetStats s;
  s.num_graphs = ds.graphs.size();
  s.num_classes = ds.num_classes;
  s.class_counts.assign(ds.num_classes, 0);
  std::size_t nodes = 0;
  std::size_t edges = 0;
  for (const auto& g : ds.graphs) {
    nodes += g.num_nodes();
    edges += g.num_edges();
    s.max_nodes = std::max(s.max_nodes, g.num_nodes());
  }
  for (const auto y : ds.labels) ++s.class_counts[y];
  if (s.num_graphs > 0) {
    s.mean_nodes = static_cast<double>(nodes) / static_cast<double>(s.num_graphs);
    s.mean_edges = static_cast<double>(edges) / static_cast<double>(s.num_graphs);
  }
  return s;
}

}  // namespace vsgraph
