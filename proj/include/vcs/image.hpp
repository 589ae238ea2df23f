// Netpbm codecs and the secret/share image model. Reads P1-P6, writes the
// raw formats P4 (PBM, 1 = black), P5 (PGM), P6 (PPM). Share files carry a
// UTF-8 key=value sidecar at <image path>.meta.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vcs/share.hpp"

namespace vcs {

struct PnmImage {
  int format = 0;  // 1..6, as read
  int width = 0;
  int height = 0;
  int maxval = 1;
  // Row-major; 1 sample per pixel for P1/P2/P4/P5, 3 for P3/P6.
  // PBM samples keep the file convention: 1 = black.
  std::vector<std::uint16_t> samples;
};

PnmImage read_pnm(const std::string& path);
void write_pbm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& black_bits);
void write_pgm(const std::string& path, int width, int height, int maxval,
               const std::vector<std::uint8_t>& values);
void write_ppm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& rgb);

struct SecretImage {
  int width = 0;
  int height = 0;
  bool color = false;
  int levels = 0;  // level count g, or palette size c
  std::vector<std::uint8_t> pixels;  // level or palette index per pixel
  std::vector<Rgb> palette;          // color secrets only
};

/// PGM (P2/P5) only. level = floor(value * g / (maxval + 1)); level 0 is the
/// scheme's lightest level.
SecretImage load_gray(const std::string& path, int g);

/// PPM (P3/P6, maxval 255) only; every pixel must match a palette entry
/// exactly. Palette entries must be distinct and differ from black (0,0,0).
SecretImage load_color(const std::string& path, const std::vector<Rgb>& palette);

/// Binary shares as PBM, color shares as PPM (black = 0,0,0), each with a
/// sidecar at <path>.meta. read_share(write_share(x)) == x bit-exactly.
void write_share(const ShareImage& share, const std::string& image_path);
ShareImage read_share(const std::string& image_path);

ShareImage share_from_set(const ShareSet& set, int index);

/// Assembles planes from independently loaded shares; throws IoError when
/// their metadata disagree (different scheme, s, seed, or dimensions).
ShareSet share_set_from_images(const std::vector<ShareImage>& shares);

std::string rgb_to_hex(const Rgb& rgb);
Rgb rgb_from_hex(const std::string& hex);

}  // namespace vcs
