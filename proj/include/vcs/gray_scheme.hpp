// g-level schemes built by concatenating a binary base: level i uses
// g-1-i copies of S0 followed by i copies of S1, so level 0 stacks lightest
// and level g-1 darkest.
#pragma once

#include <vector>

#include "vcs/binary_scheme.hpp"
#include "vcs/matrix.hpp"
#include "vcs/rational.hpp"
#include "vcs/report.hpp"

namespace vcs {

struct GrayScheme {
  int k = 0;
  int n = 0;
  int m_base = 0;  // columns of the binary base
  int g = 0;
  long m_star = 0;  // m_base * (g - 1)
  std::vector<BooleanMatrix> G;
  std::vector<long> a;  // ones in the stacked k-row OR of level i
  std::vector<long> b;  // m_star - a[i]
  std::vector<Rational> alpha_levels;
};

/// Requires a uniform base (constant subset zero counts); the per-level
/// parameters are a_i = (m-h)(g-1-i) + (m-l)i and alpha_i = alpha/(g-1).
GrayScheme build_gvss(const BinaryScheme& base, int g, long max_columns = 1L << 20);

struct GvssParams {
  long m_star;
  std::vector<long> a;
  std::vector<long> b;
  std::vector<Rational> alpha_levels;
};
GvssParams gvss_params(const GrayScheme& scheme);

/// Checks strictly separated stacked weights across consecutive levels
/// (thresholds exist iff max weight of level i < min weight of level i+1)
/// and restriction security across all levels for every subset of fewer than
/// k rows.
ValidationReport validate_gvss(const std::vector<BooleanMatrix>& G, int k);

/// Validates and derives per-level parameters by enumeration; requires the
/// stacked weights to be uniform across k-subsets.
GrayScheme gray_scheme_from_matrices(int k, int m_base, std::vector<BooleanMatrix> G);

}  // namespace vcs
