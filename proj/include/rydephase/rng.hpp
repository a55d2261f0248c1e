#pragma once

#include <cstdint>
#include <limits>

namespace rydephase {

//---------------------------------------------------------------------------//
/*!
 * Counter-based random bit generator.
 *
 * The n-th output of a stream is a pure function of (key, n): the SplitMix64
 * finalizer applied to the key-offset counter. Streams derived with
 * `substream` are independent of one another, so results do not depend on
 * how work is scheduled across threads.
 */
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed) ^ (stream * 0xd1b54a32d192ed03ull + 0x8cb92ba72f3d8dd7ull))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // Independent generator for a numbered sub-task of this stream.
  CounterRng substream(std::uint64_t index) const { return CounterRng(key_, index + 1); }

  std::uint64_t counter() const { return counter_; }

 private:
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Uniform double in the open interval (0, 1).
inline double uniform_open(CounterRng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace rydephase
