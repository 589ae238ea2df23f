#include "vcs/gray_scheme.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "vcs/util.hpp"

namespace vcs {

namespace {

struct WeightRange {
  long min_w = std::numeric_limits<long>::max();
  long max_w = std::numeric_limits<long>::min();
};

WeightRange weight_range(const BooleanMatrix& m, int k) {
  WeightRange range;
  for_each_combination(m.rows(), k, [&](const std::vector<int>& rows) {
    long w = static_cast<long>(hamming_weight(or_rows(m, rows)));
    range.min_w = std::min(range.min_w, w);
    range.max_w = std::max(range.max_w, w);
  });
  return range;
}

}  // namespace

GrayScheme build_gvss(const BinaryScheme& base, int g, long max_columns) {
  if (g < 2) throw std::invalid_argument("build_gvss: g must be >= 2");
  const long m_star = static_cast<long>(base.m) * (g - 1);
  if (m_star > max_columns) throw std::invalid_argument("build_gvss: pixel expansion exceeds cap");
  if (!is_uniform(base))
    throw std::invalid_argument("build_gvss: base scheme must have uniform subset counts");

  GrayScheme scheme;
  scheme.k = base.k;
  scheme.n = base.n;
  scheme.m_base = base.m;
  scheme.g = g;
  scheme.m_star = m_star;
  scheme.G.reserve(static_cast<std::size_t>(g));
  for (int level = 0; level < g; ++level) {
    std::vector<std::uint8_t> cells;
    cells.reserve(static_cast<std::size_t>(base.n) * static_cast<std::size_t>(m_star));
    for (int r = 0; r < base.n; ++r) {
      auto r0 = base.S0.row(r);
      auto r1 = base.S1.row(r);
      for (int copy = 0; copy < g - 1 - level; ++copy) cells.insert(cells.end(), r0.begin(), r0.end());
      for (int copy = 0; copy < level; ++copy) cells.insert(cells.end(), r1.begin(), r1.end());
    }
    scheme.G.emplace_back(base.n, static_cast<int>(m_star), std::move(cells));
  }
  const long ones_white = base.m - base.h;  // stacked ones of one S0 copy
  const long ones_black = base.m - base.l;
  for (int level = 0; level < g; ++level) {
    long a = ones_white * (g - 1 - level) + ones_black * level;
    scheme.a.push_back(a);
    scheme.b.push_back(m_star - a);
  }
  for (int level = 0; level + 1 < g; ++level) {
    Rational alpha(scheme.a[static_cast<std::size_t>(level) + 1] -
                       scheme.a[static_cast<std::size_t>(level)],
                   m_star);
    alpha.canonicalize();
    scheme.alpha_levels.push_back(alpha);
  }
  return scheme;
}

GvssParams gvss_params(const GrayScheme& scheme) {
  return {scheme.m_star, scheme.a, scheme.b, scheme.alpha_levels};
}

ValidationReport validate_gvss(const std::vector<BooleanMatrix>& G, int k) {
  if (G.size() < 2) throw std::invalid_argument("validate_gvss: need at least two levels");
  const int n = G.front().rows();
  const int m_star = G.front().cols();
  for (const auto& m : G)
    if (m.rows() != n || m.cols() != m_star)
      throw std::invalid_argument("validate_gvss: level shapes differ");
  if (k < 1 || k > n) throw std::invalid_argument("validate_gvss: bad k");

  ValidationReport report;
  std::vector<WeightRange> ranges;
  ranges.reserve(G.size());
  for (const auto& m : G) ranges.push_back(weight_range(m, k));

  bool varying = false;
  for (const auto& r : ranges) varying = varying || (r.min_w != r.max_w);
  for (const auto& r : ranges) report.level_weights.push_back(r.min_w);
  if (varying)
    for (const auto& r : ranges) report.level_weights_max.push_back(r.max_w);

  bool separated = true;
  for (std::size_t i = 0; i + 1 < ranges.size(); ++i) {
    long gap = ranges[i + 1].min_w - ranges[i].max_w;
    Rational alpha(gap, m_star);
    alpha.canonicalize();
    report.alpha_levels.push_back(alpha);
    if (gap <= 0) {
      separated = false;
      report.violations.push_back("contrast: level " + std::to_string(i + 1) +
                                  " does not stack strictly darker than level " +
                                  std::to_string(i));
    }
  }
  // h/l summarize the last-level vs first-level zero counts for reporting.
  report.h = m_star - ranges.front().max_w;
  report.l = m_star - ranges.back().min_w;
  if (!report.alpha_levels.empty()) {
    report.alpha = report.alpha_levels.front();
    for (const auto& a : report.alpha_levels) report.alpha = std::min(report.alpha, a);
  }

  report.secure = true;
  for (int j = 1; j < k; ++j) {
    for_each_combination(n, j, [&](const std::vector<int>& rows) {
      auto base = restrict_rows(G[0], rows);
      for (std::size_t level = 1; level < G.size(); ++level) {
        if (!columns_equal_up_to_permutation(base, restrict_rows(G[level], rows))) {
          report.secure = false;
          std::string ids = "{";
          for (std::size_t i = 0; i < rows.size(); ++i)
            ids += (i ? "," : "") + std::to_string(rows[i]);
          report.violations.push_back("security: rows " + ids + "} distinguish level " +
                                      std::to_string(level) + " from level 0");
        }
      }
    });
  }
  report.valid = separated && report.secure;
  return report;
}

GrayScheme gray_scheme_from_matrices(int k, int m_base, std::vector<BooleanMatrix> G) {
  ValidationReport report = validate_gvss(G, k);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "not a valid gray scheme";
    for (const auto& v : report.violations) msg << "; " << v;
    throw SchemeError(msg.str());
  }
  if (!report.level_weights_max.empty())
    throw SchemeError(
        "gray scheme has non-uniform stacked weights; the probabilistic model requires "
        "uniform levels");
  const int g = static_cast<int>(G.size());
  const long m_star = G.front().cols();
  if (m_base < 1 || static_cast<long>(m_base) * (g - 1) != m_star)
    throw std::invalid_argument("gray scheme header m does not match matrix width");

  GrayScheme scheme;
  scheme.k = k;
  scheme.n = G.front().rows();
  scheme.m_base = m_base;
  scheme.g = g;
  scheme.m_star = m_star;
  scheme.a = report.level_weights;
  for (long a : scheme.a) scheme.b.push_back(m_star - a);
  scheme.alpha_levels = report.alpha_levels;
  scheme.G = std::move(G);
  return scheme;
}

}  // namespace vcs
