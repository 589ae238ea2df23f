#include "vcs/binary_scheme.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "vcs/util.hpp"

namespace vcs {

namespace {

std::string render_rows(const std::vector<int>& rows) {
  std::string out = "{";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(rows[i]);
  }
  return out + "}";
}

struct SubsetZeroStats {
  long min_zeros = std::numeric_limits<long>::max();
  long max_zeros = std::numeric_limits<long>::min();
};

SubsetZeroStats zero_stats(const BooleanMatrix& m, int k) {
  SubsetZeroStats stats;
  for_each_combination(m.rows(), k, [&](const std::vector<int>& rows) {
    long z = static_cast<long>(zero_count(or_rows(m, rows)));
    stats.min_zeros = std::min(stats.min_zeros, z);
    stats.max_zeros = std::max(stats.max_zeros, z);
  });
  return stats;
}

}  // namespace

BinaryScheme build_2_of_n(int n) {
  if (n < 2) throw std::invalid_argument("build_2_of_n: n must be >= 2");
  std::vector<std::uint8_t> s0(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  std::vector<std::uint8_t> s1(s0.size(), 0);
  for (int r = 0; r < n; ++r) {
    s0[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(n - 1)] = 1;
    s1[static_cast<std::size_t>(r) * n + static_cast<std::size_t>(r)] = 1;
  }
  return binary_scheme_from_matrices(BooleanMatrix(n, n, std::move(s0)),
                                     BooleanMatrix(n, n, std::move(s1)), 2);
}

BinaryScheme build_n_of_n(int n, int max_n) {
  if (n < 2) throw std::invalid_argument("build_n_of_n: n must be >= 2");
  if (n > max_n) throw std::invalid_argument("build_n_of_n: n exceeds the configured bound");
  const int m = 1 << (n - 1);
  std::vector<std::uint8_t> s0;
  std::vector<std::uint8_t> s1;
  s0.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  s1.reserve(s0.capacity());
  // Column masks in binary-counting order, split by subset parity.
  std::vector<unsigned> even_masks, odd_masks;
  for (unsigned mask = 0; mask < (1u << n); ++mask)
    (__builtin_popcount(mask) % 2 == 0 ? even_masks : odd_masks).push_back(mask);
  for (int r = 0; r < n; ++r) {
    for (unsigned mask : even_masks) s0.push_back((mask >> r) & 1u);
    for (unsigned mask : odd_masks) s1.push_back((mask >> r) & 1u);
  }
  return binary_scheme_from_matrices(BooleanMatrix(n, m, std::move(s0)),
                                     BooleanMatrix(n, m, std::move(s1)), n);
}

ValidationReport validate_binary_scheme(const BooleanMatrix& S0, const BooleanMatrix& S1, int k) {
  if (S0.rows() != S1.rows() || S0.cols() != S1.cols())
    throw std::invalid_argument("validate_binary_scheme: shape mismatch");
  if (k < 1 || k > S0.rows()) throw std::invalid_argument("validate_binary_scheme: bad k");
  if (S0.cols() < 1) throw std::invalid_argument("validate_binary_scheme: empty matrices");

  ValidationReport report;
  auto white = zero_stats(S0, k);
  auto black = zero_stats(S1, k);
  report.h = white.min_zeros;
  report.l = black.max_zeros;
  report.alpha = Rational(report.h - report.l, S0.cols());
  report.alpha.canonicalize();
  if (white.min_zeros != white.max_zeros || black.min_zeros != black.max_zeros) {
    report.level_weights = {static_cast<long>(S0.cols()) - white.max_zeros,
                            static_cast<long>(S0.cols()) - black.max_zeros};
    report.level_weights_max = {static_cast<long>(S0.cols()) - white.min_zeros,
                                static_cast<long>(S0.cols()) - black.min_zeros};
  } else {
    report.level_weights = {static_cast<long>(S0.cols()) - white.min_zeros,
                            static_cast<long>(S0.cols()) - black.min_zeros};
  }
  if (report.h <= report.l)
    report.violations.push_back("contrast: h=" + std::to_string(report.h) +
                                " does not exceed l=" + std::to_string(report.l));

  report.secure = true;
  for (int j = 1; j < k; ++j) {
    for_each_combination(S0.rows(), j, [&](const std::vector<int>& rows) {
      if (!columns_equal_up_to_permutation(restrict_rows(S0, rows), restrict_rows(S1, rows))) {
        report.secure = false;
        report.violations.push_back("security: rows " + render_rows(rows) + " distinguishable");
      }
    });
  }
  report.valid = report.secure && report.h > report.l;
  return report;
}

BinaryScheme binary_scheme_from_matrices(BooleanMatrix S0, BooleanMatrix S1, int k) {
  ValidationReport report = validate_binary_scheme(S0, S1, k);
  if (!report.valid) {
    std::ostringstream msg;
    msg << "not a valid (" << k << "," << S0.rows() << ") scheme";
    for (const auto& v : report.violations) msg << "; " << v;
    throw SchemeError(msg.str());
  }
  BinaryScheme scheme{k,        S0.rows(),      S0.cols(),       std::move(S0),
                      std::move(S1), report.h, report.l, report.alpha};
  return scheme;
}

bool is_uniform(const BinaryScheme& scheme) {
  auto white = zero_stats(scheme.S0, scheme.k);
  auto black = zero_stats(scheme.S1, scheme.k);
  return white.min_zeros == white.max_zeros && black.min_zeros == black.max_zeros;
}

}  // namespace vcs
