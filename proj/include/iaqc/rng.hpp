#pragma once

#include <cstddef>
#include <cstdint>

namespace iaqc {

// Deterministic random stream (xoshiro256**) with explicit seeding and
// hand-rolled distribution mappings, so identical seeds produce identical
// draws on every platform and standard library. No global state: every
// simulation object that needs randomness takes a stream by reference.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  // One uniform01 draw per call, true with probability p.
  bool bernoulli(double p);

  // Uniform integer in [0, n), unbiased (rejection sampling). n must be > 0.
  std::size_t index_below(std::size_t n);

  double uniform(double lo, double hi);

 private:
  std::uint64_t s_[4];
};

// Stable substream derivation: rounds use derive_seed(session_seed, round),
// sweep points derive_seed(sweep_seed, point) and so on. SplitMix64 mixing.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t key);

}  // namespace iaqc
