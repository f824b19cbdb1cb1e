#pragma once

// Associative message passing and mean readout.
//
// Node states for one graph are held as a D x |V| matrix, one column per
// node. Layers are synchronous: every message is computed from the previous
// layer before any node is blended.

#include <Eigen/Core>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsgraph/graph.hpp"
#include "vsgraph/hypervector.hpp"
#include "vsgraph/spike_diffusion.hpp"

namespace vsgraph {

/// How neighbor states are joined into a message.
enum class AggregationMode {
  /// Componentwise max (fuzzy OR); equals logical OR on {0,1} inputs.
  kMax,
  /// Threshold each neighbor state at 0.5, then logical OR.
  kBinarizeOr,
};

std::string to_string(AggregationMode mode);
AggregationMode parse_aggregation_mode(const std::string& text);

struct EncoderConfig {
  std::size_t dim = 8192;
  std::size_t hops = 2;
  std::size_t layers = 2;
  double alpha = 0.5;
  SeedSpec seed{0, streams::kBasis};
  AggregationMode aggregation = AggregationMode::kMax;

  /// Throws std::invalid_argument (InvalidDimension for dim) on a bad field.
  void validate() const;
};

template <typename Scalar>
using StateMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
struct GraphEmbedding {
  DenseHypervector<Scalar> vector;
};

namespace detail {

/// Writes the aggregated messages into `out`, which must already have the
/// shape of `states`.
template <typename Derived, typename Out>
void aggregate_into(const Graph& graph, const Eigen::MatrixBase<Derived>& states,
                    AggregationMode mode, Out& out) {
  using Scalar = typename Derived::Scalar;
  const Scalar half(0.5);
  for (std::size_t i = 0; i < graph.num_nodes(); ++i) {
    auto m = out.col(static_cast<Eigen::Index>(i));
    const auto nbrs = graph.neighbors(i);
    if (nbrs.empty()) {
      m.setZero();
    } else if (mode == AggregationMode::kMax) {
      m = states.col(nbrs[0]);
      for (std::size_t k = 1; k < nbrs.size(); ++k) m = m.cwiseMax(states.col(nbrs[k]));
    } else {
      m = states.col(nbrs[0]);
      for (std::size_t k = 1; k < nbrs.size(); ++k) m = m.cwiseMax(states.col(nbrs[k]));
      m = (m.array() >= half).template cast<Scalar>().matrix();
    }
  }
}

}  // namespace detail

/// m_i = join over N(i) of the neighbor columns; isolated nodes get zeros.
template <typename Derived>
StateMatrix<typename Derived::Scalar> aggregate(const Graph& graph,
                                                const Eigen::MatrixBase<Derived>& states,
                                                AggregationMode mode = AggregationMode::kMax) {
  if (static_cast<std::size_t>(states.cols()) != graph.num_nodes()) {
    throw std::invalid_argument("aggregate: expected " + std::to_string(graph.num_nodes()) +
                                " node states, got " + std::to_string(states.cols()));
  }
  StateMatrix<typename Derived::Scalar> messages(states.rows(), states.cols());
  detail::aggregate_into(graph, states, mode, messages);
  return messages;
}

/// alpha * h + (1 - alpha) * m. Works on single vectors and state matrices.
template <typename DerivedH, typename DerivedM>
auto blend(const Eigen::MatrixBase<DerivedH>& h, const Eigen::MatrixBase<DerivedM>& m,
           double alpha) {
  using Scalar = typename DerivedH::Scalar;
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("blend: alpha must lie in [0, 1], got " + std::to_string(alpha));
  }
  if (h.rows() != m.rows() || h.cols() != m.cols()) {
    throw std::invalid_argument("blend: shape mismatch");
  }
  const auto a = static_cast<Scalar>(alpha);
  const auto b = static_cast<Scalar>(1.0 - alpha);
  return Eigen::Matrix<Scalar, DerivedH::RowsAtCompileTime, DerivedH::ColsAtCompileTime>(a * h +
                                                                                         b * m);
}

namespace detail {

/// Scalar expansion of every byte value, least significant bit first.
template <typename Scalar>
const std::array<std::array<Scalar, 8>, 256>& byte_expansion() {
  static const auto table = [] {
    std::array<std::array<Scalar, 8>, 256> t{};
    for (std::size_t v = 0; v < 256; ++v) {
      for (std::size_t b = 0; b < 8; ++b) t[v][b] = static_cast<Scalar>((v >> b) & 1u);
    }
    return t;
  }();
  return table;
}

/// Rows [first, first + rows) of to_dense(*hvs[i]) as column i.
template <typename Scalar>
StateMatrix<Scalar> dense_rows(std::span<const BinaryHypervector* const> hvs, std::size_t first,
                               std::size_t rows) {
  const auto& table = byte_expansion<Scalar>();
  StateMatrix<Scalar> out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(hvs.size()));
  for (std::size_t i = 0; i < hvs.size(); ++i) {
    Scalar* col = out.col(static_cast<Eigen::Index>(i)).data();
    const auto words = hvs[i]->words();
    std::size_t r = 0;
    if (first % 8 == 0) {
      for (; r + 8 <= rows; r += 8) {
        const std::size_t bit = first + r;
        const auto byte = (words[bit / 64] >> (bit % 64)) & 0xFFu;
        std::copy_n(table[byte].data(), 8, col + r);
      }
    }
    for (; r < rows; ++r) {
      const std::size_t bit = first + r;
      col[r] = static_cast<Scalar>((words[bit / 64] >> (bit % 64)) & 1u);
    }
  }
  return out;
}

}  // namespace detail

/// Componentwise mean of the node columns. Components must lie in [0, 1].
/// The sum is accumulated in 64-bit fixed point, where addition is exact, so
/// the result does not depend on column order and relabeling the nodes gives
/// bit-identical output. Resolution is 2^-(62 - bit_width(|V|)).
template <typename Scalar>
DenseHypervector<Scalar> readout(const StateMatrix<Scalar>& states) {
  const auto rows = static_cast<std::size_t>(states.rows());
  const auto cols = static_cast<std::uint64_t>(states.cols());
  const int frac_bits = 62 - std::bit_width(cols);
  const double scale = std::ldexp(1.0, frac_bits);
  std::vector<std::int64_t> acc(rows, 0);
  for (Eigen::Index c = 0; c < states.cols(); ++c) {
    const Scalar* col = states.col(c).data();
    for (std::size_t r = 0; r < rows; ++r) {
      acc[r] += static_cast<std::int64_t>(static_cast<double>(col[r]) * scale);
    }
  }
  DenseHypervector<Scalar> mean(states.rows());
  const double denom = static_cast<double>(cols) * scale;
  for (std::size_t r = 0; r < rows; ++r) {
    mean[static_cast<Eigen::Index>(r)] = static_cast<Scalar>(static_cast<double>(acc[r]) / denom);
  }
  return mean;
}

/// Initial node states: column i is to_dense(B[rank_i]).
template <typename Scalar = double>
StateMatrix<Scalar> initial_states(const Graph& graph, std::size_t hops, const RankBasis& basis) {
  const auto node_hvs = assign_node_hvs(graph, hops, basis);
  return detail::dense_rows<Scalar>(node_hvs, 0, basis.dim());
}

/// `layers` rounds of aggregate-then-blend applied to `states`.
template <typename Scalar>
StateMatrix<Scalar> message_pass(const Graph& graph, StateMatrix<Scalar> h, std::size_t layers,
                                 double alpha, AggregationMode mode) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("message_pass: alpha must lie in [0, 1], got " +
                                std::to_string(alpha));
  }
  if (layers == 0) return h;
  StateMatrix<Scalar> m(h.rows(), h.cols());
  const auto a = static_cast<Scalar>(alpha);
  const auto b = static_cast<Scalar>(1.0 - alpha);
  for (std::size_t layer = 0; layer < layers; ++layer) {
    detail::aggregate_into(graph, h, mode, m);
    h = a * h + b * m;
  }
  return h;
}

/// Node states after `config.layers` rounds of aggregate-then-blend.
template <typename Scalar = double>
StateMatrix<Scalar> propagate(const Graph& graph, const EncoderConfig& config,
                              const RankBasis& basis) {
  return message_pass(graph, initial_states<Scalar>(graph, config.hops, basis), config.layers,
                      config.alpha, config.aggregation);
}

/// Rows processed together by encode_graph. Every stage is componentwise, so
/// the pipeline runs block by block on a cache-resident D_block x |V| slice.
inline constexpr std::size_t kEncodeBlockRows = 256;

namespace detail {

// Runs the blockwise pipeline and calls sink(layer, first_row, block_readout)
// after the final layer, or after every layer (0 included) when
// `every_layer` is set. Both modes perform identical arithmetic.
template <typename Scalar, typename Sink>
void encode_blocks(const Graph& graph, const EncoderConfig& config, const RankBasis& basis,
                   bool every_layer, Sink&& sink) {
  if (graph.num_nodes() == 0) throw std::invalid_argument("encode_graph: empty graph");
  if (basis.dim() != config.dim) {
    throw std::invalid_argument("encode_graph: basis dimension " + std::to_string(basis.dim()) +
                                " differs from encoder dimension " + std::to_string(config.dim));
  }
  if (!(config.alpha >= 0.0 && config.alpha <= 1.0)) {
    throw std::invalid_argument("encode_graph: alpha must lie in [0, 1]");
  }
  const auto node_hvs = assign_node_hvs(graph, config.hops, basis);
  const auto a = static_cast<Scalar>(config.alpha);
  const auto b = static_cast<Scalar>(1.0 - config.alpha);
  StateMatrix<Scalar> m;
  for (std::size_t first = 0; first < config.dim; first += kEncodeBlockRows) {
    const std::size_t rows = std::min(kEncodeBlockRows, config.dim - first);
    StateMatrix<Scalar> h = dense_rows<Scalar>(node_hvs, first, rows);
    m.resize(h.rows(), h.cols());
    if (every_layer) sink(std::size_t{0}, first, readout(h));
    for (std::size_t layer = 1; layer <= config.layers; ++layer) {
      aggregate_into(graph, h, config.aggregation, m);
      h = a * h + b * m;
      if (every_layer) sink(layer, first, readout(h));
    }
    if (!every_layer) sink(config.layers, first, readout(h));
  }
}

}  // namespace detail

/// Full graph embedding z_G. Throws std::invalid_argument for an empty graph
/// or when the basis dimension differs from config.dim.
template <typename Scalar = double>
GraphEmbedding<Scalar> encode_graph(const Graph& graph, const EncoderConfig& config,
                                    const RankBasis& basis) {
  GraphEmbedding<Scalar> z{DenseHypervector<Scalar>(static_cast<Eigen::Index>(config.dim))};
  detail::encode_blocks<Scalar>(graph, config, basis, false,
                                [&](std::size_t, std::size_t first, const auto& block) {
                                  z.vector.segment(static_cast<Eigen::Index>(first), block.size()) =
                                      block;
                                });
  return z;
}

/// Embeddings for every layer count 0..config.layers from one pass; entry l
/// is bit-identical to encode_graph with layers = l.
template <typename Scalar = double>
std::vector<GraphEmbedding<Scalar>> encode_graph_layers(const Graph& graph,
                                                        const EncoderConfig& config,
                                                        const RankBasis& basis) {
  std::vector<GraphEmbedding<Scalar>> z(
      config.layers + 1,
      GraphEmbedding<Scalar>{DenseHypervector<Scalar>(static_cast<Eigen::Index>(config.dim))});
  detail::encode_blocks<Scalar>(graph, config, basis, true,
                                [&](std::size_t layer, std::size_t first, const auto& block) {
                                  z[layer].vector.segment(static_cast<Eigen::Index>(first),
                                                          block.size()) = block;
                                });
  return z;
}

}  // namespace vsgraph
