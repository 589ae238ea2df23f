// Share containers produced by the probabilistic encoders. Subpixel layout
// is horizontal row-major: pixel (x, y) owns columns x*s .. x*s+s-1 of plane
// row y, so a plane is (width*s) x height bytes.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace vcs {

using Rgb = std::array<std::uint8_t, 3>;

struct ShareSet {
  int n = 0;
  int k = 0;
  long s = 0;
  int width = 0;   // secret pixels
  int height = 0;  // secret pixels
  bool color = false;
  std::uint64_t seed = 0;
  std::string scheme_hash;
  std::string scheme_kind;  // VSS | GVSS | CVSS
  std::vector<Rgb> palette;  // display colors, color schemes only
  std::vector<std::vector<std::uint8_t>> planes;  // n planes of (width*s)*height bytes

  long plane_width() const { return static_cast<long>(width) * s; }
  std::size_t plane_size() const {
    return static_cast<std::size_t>(plane_width()) * static_cast<std::size_t>(height);
  }
};

/// One share plane plus the sidecar metadata needed to stack it later.
struct ShareImage {
  int share_index = 0;
  int n = 0;
  int k = 0;
  long s = 0;
  int width = 0;
  int height = 0;
  bool color = false;
  std::uint64_t seed = 0;
  std::string scheme_hash;
  std::string scheme_kind;
  std::vector<Rgb> palette;
  std::vector<std::uint8_t> plane;
};

}  // namespace vcs
