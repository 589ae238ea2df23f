#include "vcs/color_scheme.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "vcs/util.hpp"

namespace vcs {

namespace {

std::vector<std::uint8_t> swap_codes(std::vector<std::uint8_t> cells, std::uint8_t x,
                                     std::uint8_t y) {
  for (auto& cell : cells) {
    if (cell == x)
      cell = y;
    else if (cell == y)
      cell = x;
  }
  return cells;
}

}  // namespace

ColorScheme build_color_2n(int c, int n) {
  if (c < 2) throw std::invalid_argument("build_color_2n: c must be >= 2");
  if (n < 2) throw std::invalid_argument("build_color_2n: n must be >= 2");
  if (c >= ColorSymbol::kBlackCode)
    throw std::invalid_argument("build_color_2n: palette too large");
  const long m_prime = 1 + static_cast<long>(c - 1) * n;

  // Matrix for color 0; the others are symbol transpositions 0 <-> i of it.
  std::vector<std::uint8_t> base(static_cast<std::size_t>(n) * static_cast<std::size_t>(m_prime),
                                 ColorSymbol::kBlackCode);
  for (int r = 0; r < n; ++r) {
    auto* row = base.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(m_prime);
    row[0] = 0;
    for (int j = 1; j < c; ++j) {
      // Block of color j occupies columns 1 + (j-1)*n .. 1 + j*n - 1.
      row[1 + static_cast<std::size_t>(j - 1) * n + static_cast<std::size_t>(r)] =
          static_cast<std::uint8_t>(j);
    }
  }
  std::vector<ColorMatrix> matrices;
  matrices.reserve(static_cast<std::size_t>(c));
  matrices.emplace_back(n, static_cast<int>(m_prime), c, base);
  for (int i = 1; i < c; ++i)
    matrices.emplace_back(n, static_cast<int>(m_prime), c,
                          swap_codes(base, 0, static_cast<std::uint8_t>(i)));
  return color_scheme_from_matrices(2, std::move(matrices));
}

ValidationReport validate_color_scheme(const std::vector<ColorMatrix>& C, int k) {
  if (C.size() < 2) throw std::invalid_argument("validate_color_scheme: need >= 2 colors");
  const int c = static_cast<int>(C.size());
  const int n = C.front().rows();
  const int m_prime = C.front().cols();
  for (const auto& m : C) {
    if (m.rows() != n || m.cols() != m_prime)
      throw std::invalid_argument("validate_color_scheme: matrix shapes differ");
    if (m.palette_size() != c)
      throw std::invalid_argument("validate_color_scheme: palette size must equal color count");
  }
  if (k < 1 || k > n) throw std::invalid_argument("validate_color_scheme: bad k");

  ValidationReport report;
  long h = std::numeric_limits<long>::max();
  long l = 0;
  std::vector<long> own_min(static_cast<std::size_t>(c), std::numeric_limits<long>::max());
  std::vector<long> own_max(static_cast<std::size_t>(c), std::numeric_limits<long>::min());
  for (int i = 0; i < c; ++i) {
    for_each_combination(n, k, [&](const std::vector<int>& rows) {
      auto stacked = or_rows(C[static_cast<std::size_t>(i)], rows);
      long own = static_cast<long>(color_count(stacked, i));
      own_min[static_cast<std::size_t>(i)] = std::min(own_min[static_cast<std::size_t>(i)], own);
      own_max[static_cast<std::size_t>(i)] = std::max(own_max[static_cast<std::size_t>(i)], own);
      h = std::min(h, own);
      for (int j = 0; j < c; ++j) {
        if (j == i) continue;
        l = std::max(l, static_cast<long>(color_count(stacked, j)));
      }
    });
  }
  report.h = h;
  report.l = l;
  report.alpha = Rational(h - l, m_prime);
  report.alpha.canonicalize();
  report.level_weights = own_min;
  if (own_min != own_max) report.level_weights_max = own_max;
  for (int i = 0; i < c; ++i) {
    Rational ap(own_min[static_cast<std::size_t>(i)] - l, m_prime);
    ap.canonicalize();
    report.alpha_levels.push_back(ap);
  }
  if (h <= l)
    report.violations.push_back("contrast: h=" + std::to_string(h) +
                                " does not exceed l=" + std::to_string(l));

  report.secure = true;
  for (int j = 1; j < k; ++j) {
    for_each_combination(n, j, [&](const std::vector<int>& rows) {
      auto base = restrict_rows(C[0], rows);
      for (std::size_t i = 1; i < C.size(); ++i) {
        if (!columns_equal_up_to_permutation(base, restrict_rows(C[i], rows))) {
          report.secure = false;
          std::string ids = "{";
          for (std::size_t r = 0; r < rows.size(); ++r)
            ids += (r ? "," : "") + std::to_string(rows[r]);
          report.violations.push_back("security: rows " + ids + "} distinguish color " +
                                      std::to_string(i) + " from color 0");
        }
      }
    });
  }
  report.valid = report.secure && h > l;
  return report;
}

ColorScheme color_scheme_from_matrices(int k, std::vector<ColorMatrix> C) {
  ValidationReport report = validate_color_scheme(C, k);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "not a valid color scheme";
    for (const auto& v : report.violations) msg << "; " << v;
    throw SchemeError(msg.str());
  }
  if (!report.level_weights_max.empty())
    throw SchemeError(
        "color scheme has non-uniform stacked counts; the probabilistic model requires "
        "uniform collections");

  ColorScheme scheme;
  scheme.k = k;
  scheme.n = C.front().rows();
  scheme.c = static_cast<int>(C.size());
  scheme.m_prime = C.front().cols();
  scheme.h = report.h;
  scheme.l = report.l;
  scheme.b = report.level_weights;
  for (long own : scheme.b) scheme.a.push_back(scheme.m_prime - own);
  scheme.alpha_prime = report.alpha_levels;
  scheme.C = std::move(C);
  return scheme;
}

CvssParams cvss_params(const ColorScheme& scheme) {
  if (scheme.l != 0)
    throw std::domain_error("cvss_params: only l = 0 schemes are supported");
  return {scheme.a, scheme.b, 0, scheme.alpha_prime};
}

Lemma3Bounds lemma3_bounds(int c, int n) {
  if (c < 2 || n < 2) throw std::invalid_argument("lemma3_bounds: c, n must be >= 2");
  if (n > 62) throw std::invalid_argument("lemma3_bounds: n too large");
  const long pow = 1L << (n - 1);
  long m_min = (n % 2 == 0) ? c * pow - 1 : c * pow - c + 1;
  Rational alpha(1, m_min);
  alpha.canonicalize();
  return {m_min, alpha};
}

}  // namespace vcs
