// Probabilistic encoding by uniform column subsampling of a deterministic
// scheme's basis matrices, with the exact distribution tables and average
// contrast identities that govern it.
//
// Each secret pixel of level/color i draws s of the m* (or t of the m')
// basis columns uniformly without replacement, in uniformly random order;
// share r receives row r of the selected submatrix. The stacked block's
// own-symbol count is hypergeometric: p_j = C(a,j) C(b,s-j) / C(a+b,s).
#pragma once

#include <span>
#include <vector>

#include "vcs/color_scheme.hpp"
#include "vcs/gray_scheme.hpp"
#include "vcs/image.hpp"
#include "vcs/rational.hpp"
#include "vcs/share.hpp"

namespace vcs {

struct ProbConfig {
  long s = 1;  // chosen pixel expansion: s for gray schemes, t for color
  std::uint64_t seed = 0;
};

struct DistributionTable {
  int index = 0;  // level or color
  long s = 0;
  std::vector<Rational> p;  // p[j] for j = 0..s; sums to exactly 1
  Rational h_bar{0};        // average count of the tracked symbol
  Rational beta_bar{0};     // h_bar / s
};

/// Exact table for drawing s elements from a population of `a` tracked and
/// `b` untracked elements. beta_bar equals a/(a+b) for every s.
DistributionTable subset_distribution(long a, long b, long s);

DistributionTable level_distribution(const GrayScheme& scheme, int level, long s);
DistributionTable color_distribution(const ColorScheme& scheme, int color, long t);

/// a/m_star; the closed form of subset_distribution's beta_bar.
Rational average_contrast(long a, long m_star, long s);

/// Per consecutive level pair: (a[i+1] - a[i]) / m_star, independent of s.
std::vector<Rational> average_relative_difference(const GrayScheme& scheme, long s);

/// sum_{i=0..t} i C(a,i) C(b,t-i) == a C(a-1+b, t-1), exactly.
bool lemma2_identity(long a, long b, long t);
/// Vandermonde: sum_i C(m1,i) C(m2,m3-i) == C(m1+m2, m3).
bool lemma1_identity(long m1, long m2, long m3);

ShareSet prob_encode_gray(const SecretImage& secret, const GrayScheme& scheme,
                          const ProbConfig& cfg);
ShareSet prob_encode_color(const SecretImage& secret, const ColorScheme& scheme,
                           const ProbConfig& cfg);

/// Per-subpixel OR (binary planes) or generalized OR (color planes) of the
/// selected planes.
std::vector<std::uint8_t> stack_planes(std::span<const std::vector<std::uint8_t>> planes,
                                       std::span<const int> subset, bool color);
std::vector<std::uint8_t> stack(const ShareSet& shares, std::span<const int> subset);

struct Theorem2Averages {
  Rational beta_own;    // own-color average contrast, h/m' for every t
  Rational beta_other;  // off-color average contrast, always 0 when l = 0
  Rational alpha_bar;   // beta_own - beta_other
};
Theorem2Averages theorem2_averages(const ColorScheme& scheme, long t);

/// True when the scheme's average relative difference meets the optimal
/// (n, n) contrast bound for c colors.
bool corollary4_check(int c, int n, const ColorScheme& scheme);

}  // namespace vcs
