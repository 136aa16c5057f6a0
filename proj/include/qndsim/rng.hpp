#pragma once

// Counter-based randomness: the draw for shot i is a pure function of
// (seed, i), so results are independent of execution order and sharding.
// The generator is the splitmix64 finalizer over the Weyl sequence
// seed + GAMMA*(i+1); this mapping is part of the reproducibility contract
// and must not change between versions.

#include <cstdint>
#include <cmath>
#include <optional>

#include "qndsim/common.hpp"

namespace qndsim {

inline constexpr std::uint64_t kSplitmixGamma = 0x9e3779b97f4a7c15ULL;

inline std::uint64_t splitmix64(std::uint64_t z) {
  z += kSplitmixGamma;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform double in [0, 1) with 53 random bits, addressed by counter.
inline double uniform_at(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t z = splitmix64(seed + kSplitmixGamma * index);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

// Decorrelated child seed for a named substream (per-experiment, per-row).
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

// Sequential view over the counter-based source, with Box-Muller Gaussians.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : seed_(seed) {}

  double uniform() { return uniform_at(seed_, counter_++); }

  double gaussian() {
    if (spare_) {
      const double v = *spare_;
      spare_.reset();
      return v;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 == 0.0);
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * kPi * u2);
    return r * std::cos(2.0 * kPi * u2);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
  std::optional<double> spare_;
};

}  // namespace qndsim
