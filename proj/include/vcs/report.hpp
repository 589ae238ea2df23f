#pragma once

#include <string>
#include <vector>

#include "vcs/rational.hpp"

namespace vcs {

/// Result of checking a scheme's contrast and security conditions.
/// For binary schemes h/l are the worst-case zero counts of stacked white and
/// black pixels; for gray schemes level_weights carries the per-level stacked
/// weights; for color schemes they carry the per-color own-color counts.
struct ValidationReport {
  bool valid = false;
  bool secure = false;
  long h = 0;
  long l = 0;
  Rational alpha{0};
  std::vector<long> level_weights;
  std::vector<long> level_weights_max;  // only set when weights vary by subset
  std::vector<Rational> alpha_levels;
  std::vector<std::string> violations;

  /// Machine-readable key=value block.
  std::string to_text() const;
};

}  // namespace vcs
