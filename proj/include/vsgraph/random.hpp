#pragma once

// Counter-based randomness. Every draw is a pure function of
// (master_seed, stream_id, index, position), so callers can ask for the r-th
// basis vector or the k-th shuffle draw without replaying a sequential state.

#include <array>
#include <cstdint>

namespace vsgraph {

/// Identifies one independent random stream.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  friend bool operator==(const SeedSpec&, const SeedSpec&) = default;
};

/// Reserved stream ids. Streams derived per repeat/fold are built on top of
/// these with `derive_stream`.
namespace streams {
inline constexpr std::uint64_t kBasis = 1;
inline constexpr std::uint64_t kTieBreak = 2;
inline constexpr std::uint64_t kFolds = 3;
inline constexpr std::uint64_t kGraphs = 4;
}  // namespace streams

/// Philox4x32 with 10 rounds (Salmon et al.); output is one 128-bit block.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// 64 random bits at (index, position) of the stream.
std::uint64_t random_word(const SeedSpec& seed, std::uint64_t index,
                          std::uint64_t position) noexcept;

/// Uniform double in [0, 1) with 53 random bits.
double random_unit(const SeedSpec& seed, std::uint64_t index, std::uint64_t position) noexcept;

/// Uniform integer in [0, bound). `bound` must be > 0. Uses the high half of a
/// 128-bit product; the bias is below 2^-32 for bounds under 2^32.
std::uint64_t random_below(const SeedSpec& seed, std::uint64_t index, std::uint64_t position,
                           std::uint64_t bound) noexcept;

/// A child stream keyed by (parent stream, a, b). Children with distinct
/// (a, b) are independent of each other and of the parent.
SeedSpec derive_stream(const SeedSpec& parent, std::uint64_t a, std::uint64_t b = 0) noexcept;

}  // namespace vsgraph
