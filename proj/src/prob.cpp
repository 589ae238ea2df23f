#include "vcs/prob.hpp"

#include <stdexcept>

#include "vcs/kernels.hpp"
#include "vcs/rng.hpp"
#include "vcs/scheme_io.hpp"
#include "vcs/util.hpp"

namespace vcs {

DistributionTable subset_distribution(long a, long b, long s) {
  if (a < 0 || b < 0 || a + b < 1) throw std::invalid_argument("subset_distribution: bad a/b");
  const long m = a + b;
  if (s < 1 || s > m) throw std::invalid_argument("subset_distribution: s out of range");

  DistributionTable table;
  table.s = s;
  table.p.reserve(static_cast<std::size_t>(s) + 1);
  const Int total = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(s));
  Rational sum(0);
  Rational h_bar(0);
  for (long j = 0; j <= s; ++j) {
    Int ways = binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(j)) *
               binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(s - j));
    Rational p(ways, total);
    p.canonicalize();
    sum += p;
    h_bar += Rational(j) * p;
    table.p.push_back(p);
  }
  if (sum != 1) throw std::logic_error("subset_distribution: probabilities do not sum to 1");
  table.h_bar = h_bar;
  table.beta_bar = h_bar / Rational(s);
  table.beta_bar.canonicalize();
  return table;
}

DistributionTable level_distribution(const GrayScheme& scheme, int level, long s) {
  if (level < 0 || level >= scheme.g) throw std::invalid_argument("level out of range");
  DistributionTable table = subset_distribution(scheme.a[static_cast<std::size_t>(level)],
                                                scheme.b[static_cast<std::size_t>(level)], s);
  table.index = level;
  return table;
}

DistributionTable color_distribution(const ColorScheme& scheme, int color, long t) {
  if (color < 0 || color >= scheme.c) throw std::invalid_argument("color out of range");
  const long own = scheme.b[static_cast<std::size_t>(color)];
  DistributionTable table = subset_distribution(own, scheme.m_prime - own, t);
  table.index = color;
  return table;
}

Rational average_contrast(long a, long m_star, long s) {
  if (m_star < 1 || a < 0 || a > m_star) throw std::invalid_argument("average_contrast: bad a/m");
  if (s < 1 || s > m_star) throw std::invalid_argument("average_contrast: s out of range");
  Rational beta(a, m_star);
  beta.canonicalize();
  return beta;
}

std::vector<Rational> average_relative_difference(const GrayScheme& scheme, long s) {
  if (s < 1 || s > scheme.m_star)
    throw std::invalid_argument("average_relative_difference: s out of range");
  std::vector<Rational> out;
  for (std::size_t i = 0; i + 1 < scheme.a.size(); ++i) {
    Rational diff(scheme.a[i + 1] - scheme.a[i], scheme.m_star);
    diff.canonicalize();
    out.push_back(diff);
  }
  return out;
}

bool lemma2_identity(long a, long b, long t) {
  if (a < 1 || b < 1 || t < 1) throw std::invalid_argument("lemma2_identity: need positives");
  Int lhs(0);
  for (long i = 0; i <= t; ++i)
    lhs += Int(i) * binomial(static_cast<unsigned long>(a), static_cast<unsigned long>(i)) *
           binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(t - i));
  Int rhs = Int(a) * binomial(static_cast<unsigned long>(a - 1 + b),
                              static_cast<unsigned long>(t - 1));
  return lhs == rhs;
}

bool lemma1_identity(long m1, long m2, long m3) {
  if (m1 < 0 || m2 < 0 || m3 < 0) throw std::invalid_argument("lemma1_identity: need nonnegatives");
  Int lhs(0);
  for (long i = 0; i <= m3; ++i)
    lhs += binomial(static_cast<unsigned long>(m1), static_cast<unsigned long>(i)) *
           binomial(static_cast<unsigned long>(m2), static_cast<unsigned long>(m3 - i));
  return lhs == binomial(static_cast<unsigned long>(m1 + m2), static_cast<unsigned long>(m3));
}

namespace {

// Shared pixel loop: pulls s columns per pixel from that pixel's own stream
// and scatters row r of the selection into share r's plane.
template <typename MatrixRow>
ShareSet encode_planes(const SecretImage& secret, int n, long m, long s, std::uint64_t seed,
                       MatrixRow matrix_row) {
  ShareSet set;
  set.n = n;
  set.s = s;
  set.width = secret.width;
  set.height = secret.height;
  set.seed = seed;
  set.planes.assign(static_cast<std::size_t>(n),
                    std::vector<std::uint8_t>(
                        static_cast<std::size_t>(secret.width) * static_cast<std::size_t>(s) *
                        static_cast<std::size_t>(secret.height)));
  const long plane_width = static_cast<long>(secret.width) * s;
  parallel_for(static_cast<std::size_t>(secret.height), [&](std::size_t y) {
    for (int x = 0; x < secret.width; ++x) {
      const std::size_t pixel =
          y * static_cast<std::size_t>(secret.width) + static_cast<std::size_t>(x);
      Rng rng = derive_stream(seed, pixel);
      auto cols = rng.sample_distinct(static_cast<std::uint32_t>(m),
                                      static_cast<std::uint32_t>(s));
      const int level = secret.pixels[pixel];
      const std::size_t offset = y * static_cast<std::size_t>(plane_width) +
                                 static_cast<std::size_t>(x) * static_cast<std::size_t>(s);
      for (int r = 0; r < n; ++r) {
        auto row = matrix_row(level, r);
        auto* out = set.planes[static_cast<std::size_t>(r)].data() + offset;
        for (long q = 0; q < s; ++q) out[q] = row[cols[static_cast<std::size_t>(q)]];
      }
    }
  });
  return set;
}

}  // namespace

ShareSet prob_encode_gray(const SecretImage& secret, const GrayScheme& scheme,
                          const ProbConfig& cfg) {
  if (secret.color) throw std::invalid_argument("prob_encode_gray: secret is a color image");
  if (cfg.s < 1 || cfg.s > scheme.m_star)
    throw std::invalid_argument("prob_encode_gray: s out of range");
  for (std::uint8_t level : secret.pixels)
    if (level >= scheme.g) throw std::invalid_argument("prob_encode_gray: level out of range");

  ShareSet set = encode_planes(secret, scheme.n, scheme.m_star, cfg.s, cfg.seed,
                               [&](int level, int r) {
                                 return scheme.G[static_cast<std::size_t>(level)].row(r);
                               });
  set.k = scheme.k;
  set.color = false;
  set.scheme_kind = "GVSS";
  set.scheme_hash = scheme_hash(AnyScheme(scheme));
  return set;
}

ShareSet prob_encode_color(const SecretImage& secret, const ColorScheme& scheme,
                           const ProbConfig& cfg) {
  if (!secret.color) throw std::invalid_argument("prob_encode_color: secret is not color");
  if (cfg.s < 1 || cfg.s > scheme.m_prime)
    throw std::invalid_argument("prob_encode_color: t out of range");
  if (static_cast<int>(secret.palette.size()) != scheme.c)
    throw std::invalid_argument("prob_encode_color: palette size does not match scheme colors");
  for (std::uint8_t color : secret.pixels)
    if (color >= scheme.c) throw std::invalid_argument("prob_encode_color: color out of range");

  ShareSet set = encode_planes(secret, scheme.n, scheme.m_prime, cfg.s, cfg.seed,
                               [&](int color, int r) {
                                 return scheme.C[static_cast<std::size_t>(color)].row(r);
                               });
  set.k = scheme.k;
  set.color = true;
  set.scheme_kind = "CVSS";
  set.scheme_hash = scheme_hash(AnyScheme(scheme));
  set.palette = secret.palette;
  return set;
}

std::vector<std::uint8_t> stack_planes(std::span<const std::vector<std::uint8_t>> planes,
                                       std::span<const int> subset, bool color) {
  if (subset.empty()) throw std::invalid_argument("stack: empty share subset");
  for (int i : subset)
    if (i < 0 || i >= static_cast<int>(planes.size()))
      throw std::out_of_range("stack: share index out of range");
  std::vector<std::uint8_t> acc = planes[static_cast<std::size_t>(subset[0])];
  for (std::size_t i = 1; i < subset.size(); ++i) {
    const auto& plane = planes[static_cast<std::size_t>(subset[i])];
    if (plane.size() != acc.size()) throw std::invalid_argument("stack: plane sizes differ");
    if (color)
      kernels::generalized_or_bytes(acc.data(), plane.data(), acc.size());
    else
      kernels::or_bytes(acc.data(), plane.data(), acc.size());
  }
  return acc;
}

std::vector<std::uint8_t> stack(const ShareSet& shares, std::span<const int> subset) {
  return stack_planes(shares.planes, subset, shares.color);
}

Theorem2Averages theorem2_averages(const ColorScheme& scheme, long t) {
  if (scheme.l != 0) throw std::domain_error("theorem2_averages: requires an l = 0 scheme");
  if (t < 1 || t > scheme.m_prime)
    throw std::invalid_argument("theorem2_averages: t out of range");
  Rational own(scheme.h, scheme.m_prime);
  own.canonicalize();
  return {own, Rational(0), own};
}

bool corollary4_check(int c, int n, const ColorScheme& scheme) {
  Theorem2Averages averages = theorem2_averages(scheme, 1);
  return averages.alpha_bar >= lemma3_bounds(c, n).alpha_opt;
}

}  // namespace vcs
