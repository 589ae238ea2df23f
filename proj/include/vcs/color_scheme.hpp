// c-color schemes over the generalized-OR algebra. Stacking k shares of a
// color-i pixel shows h subpixels of color i and no subpixel of any other
// color (the l = 0 family); the rest of the block is black.
#pragma once

#include <vector>

#include "vcs/matrix.hpp"
#include "vcs/rational.hpp"
#include "vcs/report.hpp"

namespace vcs {

struct ColorScheme {
  int k = 0;
  int n = 0;
  int c = 0;
  long m_prime = 0;
  std::vector<ColorMatrix> C;  // one basis matrix per color
  long h = 0;                  // own-color coordinates in a stacked block
  long l = 0;                  // max off-color coordinates
  std::vector<long> a;         // black subpixels per reconstructed color pixel
  std::vector<long> b;         // own-color subpixels per reconstructed color pixel
  std::vector<Rational> alpha_prime;
};

/// (2, n) scheme for c colors with m' = 1 + (c-1)n: the color-i matrix has an
/// all-color-i first column and, for every other color, an n x n block with
/// that color on the diagonal and black elsewhere. h = 1, l = 0.
ColorScheme build_color_2n(int c, int n);

/// h = min over colors and k-subsets of own-color counts, l = max off-color
/// count; secure when restrictions to fewer than k rows are column-permutation
/// equal across all color matrices. Valid iff h > l and secure.
ValidationReport validate_color_scheme(const std::vector<ColorMatrix>& C, int k);

ColorScheme color_scheme_from_matrices(int k, std::vector<ColorMatrix> C);

struct CvssParams {
  std::vector<long> a;
  std::vector<long> b;
  long e = 0;  // off-color subpixels, always zero in the supported family
  std::vector<Rational> alpha_prime;
};
/// Requires l = 0.
CvssParams cvss_params(const ColorScheme& scheme);

struct Lemma3Bounds {
  long m_min;
  Rational alpha_opt;
};
/// Pixel-expansion lower bound for a c-color (n, n) scheme and the matching
/// optimal contrast: m' >= c*2^(n-1) - 1 for even n, c*2^(n-1) - c + 1 for
/// odd n.
Lemma3Bounds lemma3_bounds(int c, int n);

}  // namespace vcs
