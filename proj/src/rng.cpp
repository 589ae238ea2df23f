#include "vcs/rng.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace vcs {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t Rng::next() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
  std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

std::vector<std::uint32_t> Rng::sample_distinct(std::uint32_t population, std::uint32_t count) {
  if (count > population) throw std::invalid_argument("sample_distinct: count exceeds population");
  std::vector<std::uint32_t> out;
  out.reserve(count);
  if (population <= 4096 || 2 * count >= population) {
    // Partial Fisher-Yates: uniform over ordered tuples of distinct values.
    std::vector<std::uint32_t> idx(population);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::uint32_t i = 0; i < count; ++i) {
      std::uint32_t j = i + static_cast<std::uint32_t>(below(population - i));
      std::swap(idx[i], idx[j]);
      out.push_back(idx[i]);
    }
    return out;
  }
  // Sparse case: rejection sampling also yields uniform ordered tuples.
  std::unordered_set<std::uint32_t> seen;
  seen.reserve(count * 2);
  while (out.size() < count) {
    auto v = static_cast<std::uint32_t>(below(population));
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

Rng derive_stream(std::uint64_t seed, std::uint64_t stream) {
  return Rng(mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ull)));
}

}  // namespace vcs
