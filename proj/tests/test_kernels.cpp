#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <vector>

#include "vcs/kernels.hpp"
#include "vcs/rng.hpp"

using namespace vcs;

namespace {

std::vector<std::uint8_t> random_bytes(Rng& rng, std::size_t n, std::uint8_t max_value) {
  std::vector<std::uint8_t> out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng.below(max_value + 1));
  return out;
}

}  // namespace

TEST_CASE("scalar or_bytes matches bitwise semantics") {
  std::vector<std::uint8_t> acc{0, 1, 0, 1};
  std::vector<std::uint8_t> src{0, 0, 1, 1};
  kernels::or_bytes_scalar(acc.data(), src.data(), acc.size());
  CHECK(acc == std::vector<std::uint8_t>{0, 1, 1, 1});
}

TEST_CASE("scalar generalized_or keeps matches and absorbs mismatches") {
  const std::uint8_t B = kernels::kBlackByte;
  std::vector<std::uint8_t> acc{2, 2, B, 1};
  std::vector<std::uint8_t> src{2, 1, 2, B};
  kernels::generalized_or_bytes_scalar(acc.data(), src.data(), acc.size());
  CHECK(acc == std::vector<std::uint8_t>{2, B, B, B});
}

TEST_CASE("dispatched kernels are bit-identical to the scalar reference") {
  INFO("active backend: ", kernels::active_backend());
  Rng rng(20240517);
  // Lengths straddle the 32-byte vector width, including ragged tails.
  for (std::size_t len : {0u, 1u, 5u, 31u, 32u, 33u, 64u, 100u, 1024u, 4093u}) {
    auto a = random_bytes(rng, len, 4);
    auto b = random_bytes(rng, len, 4);
    // sprinkle black bytes
    for (std::size_t i = 0; i < len; i += 7) a[i] = kernels::kBlackByte;
    for (std::size_t i = 3; i < len; i += 11) b[i] = kernels::kBlackByte;

    auto or_ref = a;
    kernels::or_bytes_scalar(or_ref.data(), b.data(), len);
    auto or_out = a;
    kernels::or_bytes(or_out.data(), b.data(), len);
    CHECK(or_out == or_ref);

    auto gen_ref = a;
    kernels::generalized_or_bytes_scalar(gen_ref.data(), b.data(), len);
    auto gen_out = a;
    kernels::generalized_or_bytes(gen_out.data(), b.data(), len);
    CHECK(gen_out == gen_ref);

    for (std::uint8_t value : {std::uint8_t(0), std::uint8_t(2), kernels::kBlackByte}) {
      CHECK(kernels::count_equal(a.data(), len, value) ==
            kernels::count_equal_scalar(a.data(), len, value));
    }
  }
}

TEST_CASE("forced scalar backend produces the same planes") {
  Rng rng(99);
  auto a = random_bytes(rng, 257, 3);
  auto b = random_bytes(rng, 257, 3);

  auto fast = a;
  kernels::generalized_or_bytes(fast.data(), b.data(), a.size());
  std::size_t fast_count = kernels::count_equal(fast.data(), fast.size(), kernels::kBlackByte);

  kernels::force_backend_for_tests("scalar");
  CHECK(std::string(kernels::active_backend()) == "scalar");
  auto slow = a;
  kernels::generalized_or_bytes(slow.data(), b.data(), a.size());
  std::size_t slow_count = kernels::count_equal(slow.data(), slow.size(), kernels::kBlackByte);
  kernels::force_backend_for_tests(nullptr);

  CHECK(fast == slow);
  CHECK(fast_count == slow_count);
}

TEST_CASE("count_equal partitions the buffer") {
  Rng rng(4242);
  auto data = random_bytes(rng, 1000, 3);
  std::size_t total = 0;
  for (std::uint8_t v = 0; v <= 3; ++v) total += kernels::count_equal(data.data(), data.size(), v);
  CHECK(total == data.size());
}
