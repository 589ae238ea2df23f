// AVX2 variants of the byte-plane kernels. This translation unit is the only
// one compiled with -mavx2; callers reach it through the runtime dispatch in
// kernels.cpp, which checks CPU support first.
#include "vcs/kernels.hpp"

#if defined(VCS_HAVE_AVX2)

#include <immintrin.h>

namespace vcs::kernels::detail {

void or_bytes_avx2(std::uint8_t* acc, const std::uint8_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_or_si256(a, b));
  }
  for (; i < n; ++i) acc[i] = static_cast<std::uint8_t>(acc[i] | src[i]);
}

void generalized_or_bytes_avx2(std::uint8_t* acc, const std::uint8_t* src, std::size_t n) {
  const __m256i black = _mm256_set1_epi8(static_cast<char>(kBlackByte));
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i eq = _mm256_cmpeq_epi8(a, b);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), _mm256_blendv_epi8(black, a, eq));
  }
  for (; i < n; ++i) acc[i] = (acc[i] == src[i]) ? acc[i] : kBlackByte;
}

std::size_t count_equal_avx2(const std::uint8_t* data, std::size_t n, std::uint8_t value) {
  const __m256i v = _mm256_set1_epi8(static_cast<char>(value));
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    __m256i chunk = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(chunk, v)));
    total += static_cast<std::size_t>(__builtin_popcount(mask));
  }
  for (; i < n; ++i) total += (data[i] == value);
  return total;
}

}  // namespace vcs::kernels::detail

#endif  // VCS_HAVE_AVX2
