#include "vcs/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "vcs/kernels.hpp"
#include "vcs/rng.hpp"
#include "vcs/util.hpp"

namespace vcs {

namespace {

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Smallest integer N with N > q1 + q2 * sqrt(r), decided exactly:
// N - q1 > q2 sqrt(r)  <=>  N - q1 > 0 and (N - q1)^2 > q2^2 r.
long smallest_integer_above(const Rational& q1, const Rational& q2, const Int& r) {
  auto exceeds = [&](long n) {
    Rational left = Rational(n) - q1;
    if (q2 == 0 || r == 0) return left > 0;
    if (left <= 0) return false;
    return left * left > q2 * q2 * Rational(r);
  };
  double approx = to_double(q1) + to_double(q2) * std::sqrt(r.get_d());
  long n = std::max(0L, static_cast<long>(std::floor(approx)) - 2);
  while (!exceeds(n)) ++n;
  return n;
}

std::string decimal(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

// Stacked counts of `trials` independent N-pixel regions; the per-pixel count
// is the number of selected columns that are set in the stacked row mask.
std::vector<long> run_trials(const std::vector<std::uint8_t>& stacked_mask, long m, long s,
                             std::uint64_t seed, long N, long trials) {
  std::vector<long> sums(static_cast<std::size_t>(trials), 0);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t trial) {
    Rng rng = derive_stream(seed, trial);
    long total = 0;
    for (long p = 0; p < N; ++p) {
      auto cols = rng.sample_distinct(static_cast<std::uint32_t>(m),
                                      static_cast<std::uint32_t>(s));
      for (auto c : cols) total += stacked_mask[c];
    }
    sums[trial] = total;
  });
  return sums;
}

RegionHistogram finish_histogram(std::vector<long> sums, const HyperStats& stats, long N,
                                 long trials, long s) {
  RegionHistogram hist;
  hist.N = N;
  hist.trials = trials;
  hist.s = s;
  hist.mu = stats.mu;
  hist.sigma2 = stats.sigma2;
  double mean = 0;
  for (long v : sums) {
    ++hist.counts[v];
    mean += static_cast<double>(v);
  }
  mean /= static_cast<double>(trials);
  hist.empirical_mean = mean;
  double var = 0;
  for (long v : sums) {
    double diff = static_cast<double>(v) - mean;
    var += diff * diff;
  }
  hist.empirical_var = trials > 1 ? var / static_cast<double>(trials - 1) : 0.0;
  const double mu = to_double(stats.mu);
  const double sigma = std::sqrt(to_double(stats.sigma2));
  long inside = 0;
  for (long v : sums)
    if (std::abs(static_cast<double>(v) - mu) <= 3.0 * sigma + 1e-9) ++inside;
  hist.within_3sigma = static_cast<double>(inside) / static_cast<double>(trials);
  return hist;
}

}  // namespace

HyperStats hyper_stats_gray(long a, long m_star, long s, long N) {
  if (m_star < 2 || a < 0 || a > m_star) throw std::invalid_argument("hyper_stats_gray: bad a/m");
  if (s < 1 || s > m_star) throw std::invalid_argument("hyper_stats_gray: s out of range");
  if (N < 1) throw std::invalid_argument("hyper_stats_gray: N must be >= 1");
  HyperStats stats;
  stats.mu = Rational(Int(s) * N * a, Int(m_star));
  stats.mu.canonicalize();
  stats.sigma2 = Rational(Int(s) * N * (m_star - s) * a * (m_star - a),
                          Int(m_star - 1) * m_star * m_star);
  stats.sigma2.canonicalize();
  return stats;
}

HyperStats hyper_stats_color(long b, long m_prime, long t, long N) {
  return hyper_stats_gray(b, m_prime, t, N);
}

long recognition_area_gray(long a_i, long a_next, long m_star, long s, const Rational& d) {
  if (m_star < 2) throw std::invalid_argument("recognition_area_gray: bad m");
  if (a_i < 0 || a_i > m_star || a_next < 0 || a_next > m_star)
    throw std::invalid_argument("recognition_area_gray: level weights out of range");
  if (s < 1 || s > m_star) throw std::invalid_argument("recognition_area_gray: s out of range");
  const long delta = std::labs(a_next - a_i);
  if (delta == 0) throw std::invalid_argument("recognition_area_gray: levels have equal weight");
  if (d <= 0 || d >= ratio(s * delta, m_star))
    throw std::invalid_argument("recognition_area_gray: margin outside (0, s*da/m*)");
  if (s == m_star) return 0;

  // N > 9 * s(m*-s)/(m*-1) * (sqrt(x) + sqrt(y))^2 / (s*da - m**d)^2
  const Rational k = ratio(s * (m_star - s), m_star - 1);
  const Int x = Int(a_i) * (m_star - a_i);
  const Int y = Int(a_next) * (m_star - a_next);
  Rational denom = Rational(s * delta) - Rational(m_star) * d;
  Rational scale = Rational(9) * k / (denom * denom);
  scale.canonicalize();
  Rational q1 = scale * Rational(x + y);
  Rational q2 = scale * 2;
  q1.canonicalize();
  q2.canonicalize();
  return smallest_integer_above(q1, q2, x * y);
}

long recognition_area_color(long b_i, long m_prime, long t, const Rational& d) {
  if (m_prime < 2) throw std::invalid_argument("recognition_area_color: bad m");
  if (b_i < 1 || b_i > m_prime)
    throw std::invalid_argument("recognition_area_color: bad own-color count");
  if (t < 1 || t > m_prime) throw std::invalid_argument("recognition_area_color: t out of range");
  if (d <= 0 || d >= ratio(t * b_i, m_prime))
    throw std::invalid_argument("recognition_area_color: margin outside (0, t*b/m')");
  if (t == m_prime) return 0;

  // N > 9 t(m'-t) b(m'-b) / ((m'-1)(t b - m' d)^2), all rational.
  Rational denom = Rational(t * b_i) - Rational(m_prime) * d;
  Rational rhs = Rational(Int(9) * t * (m_prime - t) * b_i * (m_prime - b_i), Int(m_prime - 1)) /
                 (denom * denom);
  rhs.canonicalize();
  Int floor_rhs;
  mpz_fdiv_q(floor_rhs.get_mpz_t(), rhs.get_num().get_mpz_t(), rhs.get_den().get_mpz_t());
  return floor_rhs.get_si() + 1;
}

RegionHistogram simulate_region_gray(const GrayScheme& scheme, int level, const ProbConfig& cfg,
                                     long N, long trials) {
  if (level < 0 || level >= scheme.g)
    throw std::invalid_argument("simulate_region_gray: level out of range");
  if (N < 1 || trials < 1) throw std::invalid_argument("simulate_region_gray: bad N/trials");
  if (cfg.s < 1 || cfg.s > scheme.m_star)
    throw std::invalid_argument("simulate_region_gray: s out of range");
  std::vector<int> rows(static_cast<std::size_t>(scheme.k));
  for (int r = 0; r < scheme.k; ++r) rows[static_cast<std::size_t>(r)] = r;
  auto mask = or_rows(scheme.G[static_cast<std::size_t>(level)], rows);
  auto sums = run_trials(mask, scheme.m_star, cfg.s, cfg.seed, N, trials);
  auto stats = hyper_stats_gray(scheme.a[static_cast<std::size_t>(level)], scheme.m_star, cfg.s, N);
  return finish_histogram(std::move(sums), stats, N, trials, cfg.s);
}

RegionHistogram simulate_region_color(const ColorScheme& scheme, int color,
                                      const ProbConfig& cfg, long N, long trials) {
  if (color < 0 || color >= scheme.c)
    throw std::invalid_argument("simulate_region_color: color out of range");
  if (N < 1 || trials < 1) throw std::invalid_argument("simulate_region_color: bad N/trials");
  if (cfg.s < 1 || cfg.s > scheme.m_prime)
    throw std::invalid_argument("simulate_region_color: t out of range");
  std::vector<int> rows(static_cast<std::size_t>(scheme.k));
  for (int r = 0; r < scheme.k; ++r) rows[static_cast<std::size_t>(r)] = r;
  auto stacked = or_rows(scheme.C[static_cast<std::size_t>(color)], rows);
  std::vector<std::uint8_t> mask(stacked.size());
  for (std::size_t i = 0; i < stacked.size(); ++i)
    mask[i] = stacked[i] == static_cast<std::uint8_t>(color) ? 1 : 0;
  auto sums = run_trials(mask, scheme.m_prime, cfg.s, cfg.seed, N, trials);
  auto stats = hyper_stats_color(scheme.b[static_cast<std::size_t>(color)], scheme.m_prime,
                                 cfg.s, N);
  return finish_histogram(std::move(sums), stats, N, trials, cfg.s);
}

void RegionHistogram::write_csv(std::ostream& out) const {
  out << "sn,count\n";
  for (const auto& [sn, count] : counts) out << sn << ',' << count << '\n';
}

std::string RegionHistogram::stats_text() const {
  std::ostringstream out;
  out << "N=" << N << '\n';
  out << "trials=" << trials << '\n';
  out << "s=" << s << '\n';
  out << "mu=" << to_string(mu) << '\n';
  out << "mu_decimal=" << decimal(to_double(mu)) << '\n';
  out << "sigma2=" << to_string(sigma2) << '\n';
  out << "sigma2_decimal=" << decimal(to_double(sigma2)) << '\n';
  out << "empirical_mean=" << decimal(empirical_mean) << '\n';
  out << "empirical_var=" << decimal(empirical_var) << '\n';
  out << "within_3sigma=" << decimal(within_3sigma) << '\n';
  return out.str();
}

int classify_region_gray(std::span<const std::uint8_t> region, const GrayScheme& scheme, long s,
                         std::span<const int> candidates) {
  if (region.empty()) throw std::invalid_argument("classify_region_gray: empty region");
  if (s < 1 || region.size() % static_cast<std::size_t>(s) != 0)
    throw std::invalid_argument("classify_region_gray: region size not a multiple of s");
  if (candidates.empty()) throw std::invalid_argument("classify_region_gray: no candidates");
  const long N = static_cast<long>(region.size() / static_cast<std::size_t>(s));
  const Rational observed(static_cast<long>(hamming_weight(region)));

  int best = -1;
  Rational best_dist;
  for (int level : candidates) {
    if (level < 0 || level >= scheme.g)
      throw std::invalid_argument("classify_region_gray: candidate out of range");
    Rational mu = hyper_stats_gray(scheme.a[static_cast<std::size_t>(level)], scheme.m_star, s, N).mu;
    Rational dist = abs(observed - mu);
    if (best < 0 || dist < best_dist || (dist == best_dist && level < best)) {
      best = level;
      best_dist = dist;
    }
  }
  return best;
}

int classify_region_color(std::span<const std::uint8_t> region, const ColorScheme& scheme,
                          long t, std::span<const int> candidates, const Rational& d) {
  if (region.empty()) throw std::invalid_argument("classify_region_color: empty region");
  if (t < 1 || region.size() % static_cast<std::size_t>(t) != 0)
    throw std::invalid_argument("classify_region_color: region size not a multiple of t");
  if (candidates.empty()) throw std::invalid_argument("classify_region_color: no candidates");
  if (d < 0) throw std::invalid_argument("classify_region_color: negative margin");
  const long N = static_cast<long>(region.size() / static_cast<std::size_t>(t));

  int best = -1;
  std::size_t best_count = 0;
  for (int color : candidates) {
    if (color < 0 || color >= scheme.c)
      throw std::invalid_argument("classify_region_color: candidate out of range");
    std::size_t count = color_count(region, color);
    if (best < 0 || count > best_count) {
      best = color;
      best_count = count;
    }
  }
  if (Rational(static_cast<long>(best_count)) <= Rational(N) * d) return -1;
  return best;
}

}  // namespace vcs
