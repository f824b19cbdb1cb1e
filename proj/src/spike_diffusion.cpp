#include "vsgraph/spike_diffusion.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>

namespace vsgraph {

SpikeVector diffuse(const Graph& graph, std::size_t hops) {
  const auto n = static_cast<Eigen::Index>(graph.num_nodes());
  SpikeVector current = SpikeVector::Ones(n);
  SpikeVector next(n);
  for (std::size_t round = 0; round < hops; ++round) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double sum = 0.0;
      for (const NodeId j : graph.neighbors(static_cast<std::size_t>(i))) sum += current[j];
      next[i] = sum;
    }
    const double peak = next.maxCoeff();
    if (peak > 0.0) {
      next = next.unaryExpr([shift = -std::ilogb(peak)](double v) { return std::ldexp(v, shift); });
    }
    current.swap(next);
  }
  return current;
}

RankVector rank_nodes(std::span<const double> values) {
  std::vector<std::uint32_t> order(values.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return values[a] > values[b]; });

  // A tie group starts at position k and every member gets rank k.
  RankVector ranks(values.size(), 0);
  std::uint32_t rank = 0;
  for (std::size_t k = 1; k < order.size(); ++k) {
    const double prev = values[order[k - 1]];
    const double cur = values[order[k]];
    const double scale = std::max(std::abs(prev), std::abs(cur));
    if (prev - cur > kRankTieTolerance * scale) rank = static_cast<std::uint32_t>(k);
    ranks[order[k]] = rank;
  }
  return ranks;
}

RankBasis::RankBasis(const SeedSpec& seed, std::size_t dim) : seed_(seed), dim_(dim) {
  if (dim == 0) throw InvalidDimension("RankBasis: dimension must be >= 1");
}

std::size_t RankBasis::capacity() const {
  std::shared_lock lock(mutex_);
  return vectors_.size();
}

void RankBasis::reserve(std::size_t count) {
  std::unique_lock lock(mutex_);
  while (vectors_.size() < count) {
    vectors_.push_back(random_hypervector(seed_, vectors_.size(), dim_));
  }
}

const BinaryHypervector& RankBasis::operator[](std::size_t rank) const {
  {
    std::shared_lock lock(mutex_);
    if (rank < vectors_.size()) return vectors_[rank];
  }
  std::unique_lock lock(mutex_);
  while (vectors_.size() <= rank) {
    vectors_.push_back(random_hypervector(seed_, vectors_.size(), dim_));
  }
  return vectors_[rank];
}

std::vector<const BinaryHypervector*> assign_node_hvs(const Graph& graph, std::size_t hops,
                                                      const RankBasis& basis) {
  const RankVector ranks = rank_nodes(diffuse(graph, hops));
  std::vector<const BinaryHypervector*> out;
  out.reserve(ranks.size());
  for (const auto r : ranks) out.push_back(&basis[r]);
  return out;
}

}  // namespace vsgraph
