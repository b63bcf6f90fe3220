//
// Project kpath - Copyright 2026 kpath developers.
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kpath {

// Deterministic splitmix64 generator. All randomness in the library goes
// through this type so results are bit-identical across platforms, runs and
// thread counts; std::random distributions are implementation-defined and
// deliberately not used.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) {
      throw std::invalid_argument("Rng::next_below: bound must be positive");
    }
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    std::uint64_t r = next_u64();
    while (r < threshold) r = next_u64();
    return r % bound;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  std::uint64_t state_;
};

// Derives an independent substream seed from a master seed and a stream
// index. The mixing constants are fixed for reproducibility and must not
// change between releases: 0x9E3779B97F4A7C15 (golden ratio),
// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (splitmix64 finalizer).
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Fisher-Yates shuffle driven by Rng (std::shuffle is not cross-platform
// deterministic).
template <class T>
void deterministic_shuffle(std::vector<T>& items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::swap(items[i - 1], items[rng.next_below(i)]);
  }
}

}  // namespace kpath
