// Region statistics of reconstructed areas: exact hypergeometric mean and
// variance of stacked subpixel counts, minimum region sizes at which adjacent
// levels (or a color against its black background) separate by three standard
// deviations plus a margin, Monte Carlo reproduction of those statistics, and
// region classification.
#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vcs/color_scheme.hpp"
#include "vcs/gray_scheme.hpp"
#include "vcs/prob.hpp"
#include "vcs/rational.hpp"

namespace vcs {

struct HyperStats {
  Rational mu;      // expected stacked count over an N-pixel region
  Rational sigma2;  // its variance; zero at full expansion
};

/// Region of N pixels of a level with `a` ones among m_star basis columns,
/// encoded at expansion s and stacked: mu = s N a / m*,
/// sigma2 = s N (m*-s) a (m*-a) / ((m*-1) m*^2).
HyperStats hyper_stats_gray(long a, long m_star, long s, long N);

/// Same for a color region: own-color count with b own columns among m'.
HyperStats hyper_stats_color(long b, long m_prime, long t, long N);

/// Smallest region size N such that the stacked counts of two adjacent
/// levels separate by 3 sigma each plus margin d (subpixel fraction units,
/// 0 < d < s|a_next - a_i|/m*). Zero when s = m*.
long recognition_area_gray(long a_i, long a_next, long m_star, long s, const Rational& d);

/// Color analogue against the absent off-color signal; requires
/// 0 < d < t b_i / m'. Zero when t = m'.
long recognition_area_color(long b_i, long m_prime, long t, const Rational& d);

struct RegionHistogram {
  long N = 0;
  long trials = 0;
  long s = 0;
  std::map<long, long> counts;  // stacked count -> number of trials
  Rational mu{0};
  Rational sigma2{0};
  double empirical_mean = 0.0;
  double empirical_var = 0.0;  // sample variance
  double within_3sigma = 0.0;  // fraction of trials inside mu +- 3 sigma

  void write_csv(std::ostream& out) const;  // header "sn,count"
  std::string stats_text() const;
};

/// Encodes N pixels of the level per trial, stacks the first k shares and
/// counts black subpixels. Trial streams derive from (seed, trial).
RegionHistogram simulate_region_gray(const GrayScheme& scheme, int level, const ProbConfig& cfg,
                                     long N, long trials);
/// Color version counts own-color subpixels.
RegionHistogram simulate_region_color(const ColorScheme& scheme, int color,
                                      const ProbConfig& cfg, long N, long trials);

/// Nearest expected-count decision among the candidate levels for a stacked
/// region of N = region.size()/s pixels. Ties resolve to the lower level.
int classify_region_gray(std::span<const std::uint8_t> region, const GrayScheme& scheme, long s,
                         std::span<const int> candidates);

/// Picks the candidate color with the highest own-color count, requiring it
/// to clear the margin threshold N*d; returns -1 when nothing does.
int classify_region_color(std::span<const std::uint8_t> region, const ColorScheme& scheme,
                          long t, std::span<const int> candidates, const Rational& d);

}  // namespace vcs
