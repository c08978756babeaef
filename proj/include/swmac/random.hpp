#pragma once

#include <cstdint>
#include <initializer_list>

namespace swmac {

/// SplitMix64 output finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Derives a substream key from a master seed and a path of indices.
/// Distinct paths give statistically independent keys.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t key = mix64(seed ^ 0x6A09E667F3BCC909ULL);
  for (std::uint64_t id : path) key = mix64(key ^ mix64(id + 0x9E3779B97F4A7C15ULL));
  return key;
}

/// Counter-based generator: value i of a stream is mix64(key + (i+1)*golden).
/// Any position is reachable in O(1), so a stream can be split into chunks
/// that are generated in any order and still agree with a serial pass.
class CounterStream {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  explicit constexpr CounterStream(std::uint64_t key, std::uint64_t position = 0) noexcept
      : key_(key), position_(position) {}

  constexpr std::uint64_t next() noexcept { return mix64(key_ + (++position_) * kGolden); }

  /// Uniform on the grid {k * 2^-53 : 0 <= k < 2^53}; 1 - u is exact.
  constexpr double next_unit() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr void seek(std::uint64_t position) noexcept { position_ = position; }
  constexpr std::uint64_t position() const noexcept { return position_; }
  constexpr std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t position_;
};

}  // namespace swmac
