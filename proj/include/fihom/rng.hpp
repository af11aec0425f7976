#pragma once

#include <array>
#include <cstdint>

namespace fihom {

/// xoshiro256** seeded through splitmix64. The exact algorithm is part of
/// the fuzz file format: a seed reproduces the same presentations on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream for trial `trial` of a run seeded with `seed`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial);

  std::uint64_t next();
  /// Uniform in [0, bound), bound > 0, without modulo bias.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi);

 private:
  std::array<std::uint64_t, 4> s_{};
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace fihom
