// Seeded, splittable RNG. Every pixel and every simulation trial draws from
// its own stream derived from (seed, stream index), so results do not depend
// on processing order or worker count.
#pragma once

#include <cstdint>
#include <vector>

namespace vcs {

/// SplitMix64 finalizer; bijective 64-bit mix.
std::uint64_t mix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t state) : state_(state) {}

  std::uint64_t next();

  /// Uniform in [0, bound); bound must be nonzero. Unbiased via rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Uniformly ordered sample of `count` distinct values from [0, population).
  std::vector<std::uint32_t> sample_distinct(std::uint32_t population, std::uint32_t count);

 private:
  std::uint64_t state_;
};

Rng derive_stream(std::uint64_t seed, std::uint64_t stream);

}  // namespace vcs
