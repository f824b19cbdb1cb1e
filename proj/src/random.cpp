#include "vsgraph/random.hpp"

namespace vsgraph {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::array<std::uint32_t, 2> stream_key(const SeedSpec& seed) noexcept {
  const std::uint64_t k = splitmix64(seed.master_seed ^ splitmix64(seed.stream_id));
  return {static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    const std::uint64_t p0 = static_cast<std::uint64_t>(kPhiloxM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kPhiloxM1) * ctr[2];
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

std::uint64_t random_word(const SeedSpec& seed, std::uint64_t index,
                          std::uint64_t position) noexcept {
  // One Philox block yields two words; the block counter is position / 2.
  const std::uint64_t block = position >> 1;
  const auto out = philox4x32({static_cast<std::uint32_t>(block),
                               static_cast<std::uint32_t>(block >> 32),
                               static_cast<std::uint32_t>(index),
                               static_cast<std::uint32_t>(index >> 32)},
                              stream_key(seed));
  const std::size_t half = (position & 1u) * 2;
  return static_cast<std::uint64_t>(out[half]) | (static_cast<std::uint64_t>(out[half + 1]) << 32);
}

double random_unit(const SeedSpec& seed, std::uint64_t index, std::uint64_t position) noexcept {
  return static_cast<double>(random_word(seed, index, position) >> 11) * 0x1.0p-53;
}

std::uint64_t random_below(const SeedSpec& seed, std::uint64_t index, std::uint64_t position,
                           std::uint64_t bound) noexcept {
  const unsigned __int128 product =
      static_cast<unsigned __int128>(random_word(seed, index, position)) * bound;
  return static_cast<std::uint64_t>(product >> 64);
}

SeedSpec derive_stream(const SeedSpec& parent, std::uint64_t a, std::uint64_t b) noexcept {
  const std::uint64_t id = splitmix64(splitmix64(parent.stream_id ^ 0x5851F42D4C957F2Dull) ^
                                      splitmix64(a + 0x14057B7EF767814Full) ^
                                      (splitmix64(b) << 1));
  return SeedSpec{parent.master_seed, id};
}

}  // namespace vsgraph
