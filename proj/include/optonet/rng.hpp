#pragma once

#include <cstdint>
#include <limits>

namespace optonet {

/// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stream tags; each subsystem draws from its own family of keys.
enum class StreamTag : std::uint64_t {
  graph = 1,
  orientation = 2,
  detection = 3,
  drive = 4,
  write_noise = 5,
  source_sampling = 6,
};

/// Counter-based generator: output i is mix64 of (key, i). Keys are derived from
/// (master seed, tag, index), so each stream is reproducible no matter which
/// other streams were consumed or in what order.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  constexpr CounterRng() = default;
  constexpr CounterRng(std::uint64_t seed, StreamTag tag, std::uint64_t index)
      : key_(mix64(mix64(seed ^ mix64(static_cast<std::uint64_t>(tag))) ^ mix64(~index))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  constexpr result_type operator()() { return mix64(key_ ^ mix64(counter_++)); }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  [[nodiscard]] constexpr std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace optonet
