#pragma once

#include <cstdint>

namespace relcube {

// SplitMix64 finalizer. Used both as the generator step and to derive
// independent per-trial seeds from (seed, trial index).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Counter-based 64-bit generator (SplitMix64). Fully specified arithmetic,
// so streams are identical across platforms and thread counts.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, bound). Rejection on the top range keeps
  // the draw exact without floating point.
  std::uint32_t next_below(std::uint32_t bound) {
    std::uint64_t threshold = (~std::uint64_t{0} - bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return static_cast<std::uint32_t>(r % bound);
    }
  }

 private:
  std::uint64_t state_;
};

// Stream for one Monte Carlo trial: hash(seed, trial) seeds an independent
// SplitMix64, so trials can be partitioned across workers arbitrarily.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(mix64(seed ^ mix64(trial + 0x8E9B5C6A1F3D2E4Bull)));
}

}  // namespace relcube
