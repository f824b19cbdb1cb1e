#pragma once

// Topology-derived node identities: K rounds of synchronous spike diffusion,
// a descending competition ranking of the responses, and a seeded rank basis that
// maps each rank to a fixed binary hypervector shared by every graph.

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <deque>
#include <shared_mutex>
#include <span>
#include <vector>

#include "vsgraph/graph.hpp"
#include "vsgraph/hypervector.hpp"

namespace vsgraph {

using SpikeVector = Eigen::VectorXd;
using RankVector = std::vector<std::uint32_t>;

/// Relative tolerance under which two responses count as tied.
inline constexpr double kRankTieTolerance = 1e-9;

/// K synchronous rounds of s_i <- sum_{j in N(i)} s_j from s = 1. After every
/// round the vector is rescaled by a power of two so that its maximum lies in
/// [1, 2); rescaling by 2^k is exact in binary floating point, so the result
/// equals A^K 1 up to one positive factor whenever A^K 1 fits in 53 bits.
SpikeVector diffuse(const Graph& graph, std::size_t hops);

/// Descending competition ranking: a node's rank is the number of nodes with
/// a strictly larger value, so values equal within kRankTieTolerance
/// (relative) share a rank and the next distinct value skips past the group.
/// Example: {1, 2, 1} -> {1, 0, 1}.
RankVector rank_nodes(std::span<const double> values);

inline RankVector rank_nodes(const SpikeVector& spikes) {
  return rank_nodes(std::span<const double>(spikes.data(), static_cast<std::size_t>(spikes.size())));
}

/// Item memory B[r] for ranks. B[r] is `random_hypervector(seed, r, dim)` and
/// is materialized lazily; growing the cache never changes earlier entries.
/// Safe for concurrent readers; growth takes an exclusive lock.
class RankBasis {
 public:
  RankBasis(const SeedSpec& seed, std::size_t dim);

  RankBasis(const RankBasis&) = delete;
  RankBasis& operator=(const RankBasis&) = delete;

  [[nodiscard]] const SeedSpec& seed() const noexcept { return seed_; }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t capacity() const;

  /// Materializes B[0..count).
  void reserve(std::size_t count);

  /// B[rank]. The reference stays valid for the lifetime of the basis.
  [[nodiscard]] const BinaryHypervector& operator[](std::size_t rank) const;

 private:
  SeedSpec seed_;
  std::size_t dim_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<BinaryHypervector> vectors_;
};

inline const BinaryHypervector& basis_vector(const RankBasis& basis, std::size_t rank) {
  return basis[rank];
}

/// Per-node B[rank_i] after `hops` rounds of diffusion. Pointers refer into
/// the basis.
std::vector<const BinaryHypervector*> assign_node_hvs(const Graph& graph, std::size_t hops,
                                                      const RankBasis& basis);

}  // namespace vsgraph
