#include "vcs/kernels.hpp"

#include <atomic>
#include <cstring>
#include <stdexcept>
#include <string>

namespace vcs::kernels {

void or_bytes_scalar(std::uint8_t* acc, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = static_cast<std::uint8_t>(acc[i] | src[i]);
}

void generalized_or_bytes_scalar(std::uint8_t* acc, const std::uint8_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] = (acc[i] == src[i]) ? acc[i] : kBlackByte;
}

std::size_t count_equal_scalar(const std::uint8_t* data, std::size_t n, std::uint8_t value) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) total += (data[i] == value);
  return total;
}

#if defined(VCS_HAVE_AVX2)
namespace detail {
void or_bytes_avx2(std::uint8_t* acc, const std::uint8_t* src, std::size_t n);
void generalized_or_bytes_avx2(std::uint8_t* acc, const std::uint8_t* src, std::size_t n);
std::size_t count_equal_avx2(const std::uint8_t* data, std::size_t n, std::uint8_t value);
}  // namespace detail
#endif

namespace {

enum class Backend : int { scalar = 0, avx2 = 1 };

Backend detect_backend() {
#if defined(VCS_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
  return Backend::scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

void or_bytes(std::uint8_t* acc, const std::uint8_t* src, std::size_t n) {
#if defined(VCS_HAVE_AVX2)
  if (g_backend.load(std::memory_order_relaxed) == Backend::avx2)
    return detail::or_bytes_avx2(acc, src, n);
#endif
  or_bytes_scalar(acc, src, n);
}

void generalized_or_bytes(std::uint8_t* acc, const std::uint8_t* src, std::size_t n) {
#if defined(VCS_HAVE_AVX2)
  if (g_backend.load(std::memory_order_relaxed) == Backend::avx2)
    return detail::generalized_or_bytes_avx2(acc, src, n);
#endif
  generalized_or_bytes_scalar(acc, src, n);
}

std::size_t count_equal(const std::uint8_t* data, std::size_t n, std::uint8_t value) {
#if defined(VCS_HAVE_AVX2)
  if (g_backend.load(std::memory_order_relaxed) == Backend::avx2)
    return detail::count_equal_avx2(data, n, value);
#endif
  return count_equal_scalar(data, n, value);
}

const char* active_backend() {
  return g_backend.load(std::memory_order_relaxed) == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend_for_tests(const char* name) {
  if (name == nullptr) {
    g_backend.store(detect_backend());
    return;
  }
  std::string want(name);
  if (want == "scalar") {
    g_backend.store(Backend::scalar);
  } else if (want == "avx2") {
    if (detect_backend() != Backend::avx2)
      throw std::runtime_error("avx2 backend unavailable on this machine");
    g_backend.store(Backend::avx2);
  } else {
    throw std::invalid_argument("unknown kernel backend: " + want);
  }
}

}  // namespace vcs::kernels
