#pragma once

// Binary and dense hypervectors and the HDC algebra over them.
//
// Binary vectors are bit-packed into 64-bit words, least significant bit
// first. Bits past dim() in the last word are always zero so word-wise
// popcounts are exact. Dense vectors are plain Eigen column vectors templated
// on the scalar type; the free functions below accept any Eigen expression.

#include <Eigen/Core>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "vsgraph/errors.hpp"
#include "vsgraph/random.hpp"

namespace vsgraph {

class BinaryHypervector {
 public:
  static constexpr std::size_t kWordBits = 64;

  BinaryHypervector() = default;
  /// All-zero vector. Throws InvalidDimension when dim == 0.
  explicit BinaryHypervector(std::size_t dim);

  static BinaryHypervector ones(std::size_t dim);
  /// Builds from packed words; tail bits beyond dim are cleared.
  static BinaryHypervector from_words(std::size_t dim, std::vector<std::uint64_t> words);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t num_words() const noexcept { return words_.size(); }
  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }
  /// Bytes of packed storage: ceil(dim / 64) * 8.
  [[nodiscard]] std::size_t storage_bytes() const noexcept { return words_.size() * 8; }

  [[nodiscard]] bool get(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  [[nodiscard]] std::size_t popcount() const noexcept;

  /// Componentwise complement (tail bits stay zero).
  [[nodiscard]] BinaryHypervector operator~() const;

  friend bool operator==(const BinaryHypervector&, const BinaryHypervector&) = default;

  static constexpr std::size_t words_for(std::size_t dim) noexcept {
    return (dim + kWordBits - 1) / kWordBits;
  }

 private:
  void clear_tail() noexcept;

  std::size_t dim_ = 0;
  std::vector<std::uint64_t> words_;
};

template <typename Scalar>
using DenseHypervector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Regularizer for all L2 normalizations and cosine similarities.
inline constexpr double kNormEpsilon = 1e-12;

/// Fair-coin bits determined only by (seed, index, dim). Bit d lives in word
/// d / 64, and word w is drawn at counter position w, so a shorter vector is
/// a prefix of a longer one with the same seed and index.
BinaryHypervector random_hypervector(const SeedSpec& seed, std::uint64_t index, std::size_t dim);

/// Tie-break vector used by majority bundling: `random_hypervector` on the
/// reserved tie-break stream of `master_seed`.
BinaryHypervector tie_break_vector(std::uint64_t master_seed, std::size_t dim);

/// Componentwise XOR.
BinaryHypervector bind(const BinaryHypervector& x, const BinaryHypervector& y);

/// Componentwise strict majority. Exact ties take the matching bit of
/// `tie_break`, which must have the same dim.
BinaryHypervector bundle(std::span<const BinaryHypervector> vs, const BinaryHypervector& tie_break);

/// Majority bundle with the tie-break vector of master seed 0.
BinaryHypervector bundle(std::span<const BinaryHypervector> vs);

/// 1 - hamming(x, y) / dim.
double hamming_similarity(const BinaryHypervector& x, const BinaryHypervector& y);

/// Number of differing bits.
std::size_t hamming_distance(const BinaryHypervector& x, const BinaryHypervector& y);

/// Lifts bits to {0.0, 1.0}.
template <typename Scalar = double>
DenseHypervector<Scalar> to_dense(const BinaryHypervector& x) {
  DenseHypervector<Scalar> out(static_cast<Eigen::Index>(x.dim()));
  for (std::size_t d = 0; d < x.dim(); ++d) {
    out[static_cast<Eigen::Index>(d)] = x.get(d) ? Scalar(1) : Scalar(0);
  }
  return out;
}

/// Bit d is set iff component d >= threshold.
template <typename Derived>
BinaryHypervector threshold(const Eigen::MatrixBase<Derived>& v,
                            typename Derived::Scalar cut = typename Derived::Scalar(0.5)) {
  BinaryHypervector out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index d = 0; d < v.size(); ++d) {
    if (v[d] >= cut) out.set(static_cast<std::size_t>(d), true);
  }
  return out;
}

/// u.v / ((|u| + eps)(|v| + eps)). Zero vectors give 0.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine_similarity(const Eigen::MatrixBase<DerivedA>& u,
                                            const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  if (u.size() != v.size()) {
    throw std::invalid_argument("cosine_similarity: dimension mismatch (" +
                                std::to_string(u.size()) + " vs " + std::to_string(v.size()) +
                                ")");
  }
  const Scalar eps = static_cast<Scalar>(kNormEpsilon);
  return u.dot(v) / ((u.norm() + eps) * (v.norm() + eps));
}

/// v / (|v| + eps).
template <typename Derived>
DenseHypervector<typename Derived::Scalar> normalized(const Eigen::MatrixBase<Derived>& v) {
  using Scalar = typename Derived::Scalar;
  return v / (v.norm() + static_cast<Scalar>(kNormEpsilon));
}

}  // namespace vsgraph
