#pragma once

#include <cstdint>
#include <vector>

namespace dd {

/// Counter-based generator: a splitmix64 stream keyed by (seed, stream_index).
/// Draws depend only on the key and the number of values consumed, so
/// independent realizations are reproducible regardless of thread scheduling.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(mix(seed + 0x9e3779b97f4a7c15ull) ^ mix(stream + 0xbf58476d1ce4e5b9ull))) {}

  std::uint64_t next_u64() {
    std::uint64_t z = key_ + (++ctr_) * 0x9e3779b97f4a7c15ull;
    return mix(z);
  }

  /// uniform in [0,1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// unbiased uniform integer in [0, n)
  std::uint32_t uniform_int(std::uint32_t n) {
    // Lemire's multiply-shift with rejection
    std::uint64_t x = next_u64() & 0xffffffffull;
    std::uint64_t m = x * n;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < n) {
      std::uint32_t t = (0u - n) % n;
      while (lo < t) {
        x = next_u64() & 0xffffffffull;
        m = x * n;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  /// Fisher-Yates shuffle
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = uniform_int(static_cast<std::uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

}  // namespace dd
