// Byte-plane kernels behind the stacking and counting hot loops.
//
// Each kernel has a scalar reference implementation and may have SIMD
// variants; the dispatched entry points pick the widest ISA the CPU reports
// at process start. All variants must be bit-identical to the scalar
// reference (enforced by the equivalence tests).
//
// Plane conventions: binary planes hold 0/1 bytes (1 = black); color planes
// hold palette indices with kBlackByte for black.
#pragma once

#include <cstddef>
#include <cstdint>

namespace vcs::kernels {

inline constexpr std::uint8_t kBlackByte = 0xFF;

// Scalar reference implementations.
void or_bytes_scalar(std::uint8_t* acc, const std::uint8_t* src, std::size_t n);
void generalized_or_bytes_scalar(std::uint8_t* acc, const std::uint8_t* src, std::size_t n);
std::size_t count_equal_scalar(const std::uint8_t* data, std::size_t n, std::uint8_t value);

// Dispatched entry points.

/// acc[i] |= src[i]
void or_bytes(std::uint8_t* acc, const std::uint8_t* src, std::size_t n);

/// acc[i] = acc[i] if acc[i] == src[i], else kBlackByte.
/// Matching symbols persist; any mismatch (including black) absorbs to black.
void generalized_or_bytes(std::uint8_t* acc, const std::uint8_t* src, std::size_t n);

/// Number of bytes equal to value.
std::size_t count_equal(const std::uint8_t* data, std::size_t n, std::uint8_t value);

/// "scalar" or "avx2".
const char* active_backend();

/// Test hook: "scalar", "avx2", or nullptr to restore auto-detection.
/// Throws if the requested backend is unavailable on this machine.
void force_backend_for_tests(const char* name);

}  // namespace vcs::kernels
