#include "vsgraph/hypervector.hpp"

#include <bit>
#include <stdexcept>

namespace vsgraph {
namespace {

void require_same_dim(const BinaryHypervector& x, const BinaryHypervector& y, const char* op) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument(std::string(op) + ": dimension mismatch (" +
                                std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) + ")");
  }
}

}  // namespace

BinaryHypervector::BinaryHypervector(std::size_t dim) : dim_(dim), words_(words_for(dim), 0) {
  if (dim == 0) throw InvalidDimension("hypervector dimension must be >= 1");
}

BinaryHypervector BinaryHypervector::ones(std::size_t dim) {
  BinaryHypervector v(dim);
  for (auto& w : v.words_) w = ~std::uint64_t{0};
  v.clear_tail();
  return v;
}

BinaryHypervector BinaryHypervector::from_words(std::size_t dim,
                                                std::vector<std::uint64_t> words) {
  BinaryHypervector v(dim);
  if (words.size() != v.words_.size()) {
    throw std::invalid_argument("from_words: expected " + std::to_string(v.words_.size()) +
                                " words for dim " + std::to_string(dim) + ", got " +
                                std::to_string(words.size()));
  }
  v.words_ = std::move(words);
  v.clear_tail();
  return v;
}

void BinaryHypervector::clear_tail() noexcept {
  const std::size_t used = dim_ % kWordBits;
  if (used != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << used) - 1;
  }
}

std::size_t BinaryHypervector::popcount() const noexcept {
  std::size_t n = 0;
  for (const auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BinaryHypervector BinaryHypervector::operator~() const {
  BinaryHypervector out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

BinaryHypervector random_hypervector(const SeedSpec& seed, std::uint64_t index, std::size_t dim) {
  if (dim == 0) throw InvalidDimension("random_hypervector: dimension must be >= 1");
  std::vector<std::uint64_t> words(BinaryHypervector::words_for(dim));
  for (std::size_t w = 0; w < words.size(); ++w) {
    words[w] = random_word(seed, index, w);
  }
  return BinaryHypervector::from_words(dim, std::move(words));
}

BinaryHypervector tie_break_vector(std::uint64_t master_seed, std::size_t dim) {
  return random_hypervector(SeedSpec{master_seed, streams::kTieBreak}, 0, dim);
}

BinaryHypervector bind(const BinaryHypervector& x, const BinaryHypervector& y) {
  require_same_dim(x, y, "bind");
  std::vector<std::uint64_t> words(x.num_words());
  const auto xw = x.words();
  const auto yw = y.words();
  for (std::size_t w = 0; w < words.size(); ++w) words[w] = xw[w] ^ yw[w];
  return BinaryHypervector::from_words(x.dim(), std::move(words));
}

BinaryHypervector bundle(std::span<const BinaryHypervector> vs,
                         const BinaryHypervector& tie_break) {
  if (vs.empty()) throw std::invalid_argument("bundle: empty input list");
  const std::size_t dim = vs.front().dim();
  for (const auto& v : vs) require_same_dim(vs.front(), v, "bundle");
  require_same_dim(vs.front(), tie_break, "bundle (tie-break)");

  if (vs.size() == 1) return vs.front();

  std::vector<std::uint32_t> counts(dim, 0);
  for (const auto& v : vs) {
    const auto words = v.words();
    for (std::size_t w = 0; w < words.size(); ++w) {
      std::uint64_t bits = words[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        ++counts[w * BinaryHypervector::kWordBits + static_cast<std::size_t>(b)];
        bits &= bits - 1;
      }
    }
  }

  const std::size_t n = vs.size();
  BinaryHypervector out(dim);
  for (std::size_t d = 0; d < dim; ++d) {
    const std::size_t twice = 2 * static_cast<std::size_t>(counts[d]);
    if (twice > n || (twice == n && tie_break.get(d))) out.set(d, true);
  }
  return out;
}

BinaryHypervector bundle(std::span<const BinaryHypervector> vs) {
  if (vs.empty()) throw std::invalid_argument("bundle: empty input list");
  return bundle(vs, tie_break_vector(0, vs.front().dim()));
}

std::size_t hamming_distance(const BinaryHypervector& x, const BinaryHypervector& y) {
  require_same_dim(x, y, "hamming_distance");
  const auto xw = x.words();
  const auto yw = y.words();
  std::size_t n = 0;
  for (std::size_t w = 0; w < xw.size(); ++w) {
    n += static_cast<std::size_t>(std::popcount(xw[w] ^ yw[w]));
  }
  return n;
}

double hamming_similarity(const BinaryHypervector& x, const BinaryHypervector& y) {
  const std::size_t dist = hamming_distance(x, y);
  return 1.0 - static_cast<double>(dist) / static_cast<double>(x.dim());
}

}  // namespace vsgraph
