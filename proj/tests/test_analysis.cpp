#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <sstream>

#include "oracles.hpp"
#include "vcs/analysis.hpp"
#include "vcs/util.hpp"

using namespace vcs;
using oracles::frac;

namespace {

GrayScheme reference_gray() { return build_gvss(build_2_of_n(3), 3); }
ColorScheme reference_color() { return build_color_2n(3, 3); }

}  // namespace

TEST_CASE("region statistics, gray") {
  SUBCASE("lightest level of the reference scheme at s=1") {
    HyperStats stats = hyper_stats_gray(2, 6, 1, 100);
    CHECK(stats.mu == Rational(100, 3));
    CHECK(stats.sigma2 == Rational(200, 9));
  }
  SUBCASE("full expansion is deterministic") {
    HyperStats stats = hyper_stats_gray(2, 6, 6, 100);
    CHECK(stats.mu == 200);
    CHECK(stats.sigma2 == 0);
  }
  SUBCASE("mid expansion") {
    HyperStats stats = hyper_stats_gray(4, 6, 3, 100);
    CHECK(stats.mu == 200);
    CHECK(stats.sigma2 == 40);
  }
  SUBCASE("guards") {
    CHECK_THROWS_AS(hyper_stats_gray(2, 6, 0, 100), std::invalid_argument);
    CHECK_THROWS_AS(hyper_stats_gray(2, 6, 7, 100), std::invalid_argument);
    CHECK_THROWS_AS(hyper_stats_gray(7, 6, 1, 100), std::invalid_argument);
  }
}

TEST_CASE("region statistics, color, against the rounded reference row") {
  // own-color counts for b=1, m'=7, N=100 at t = 1..7
  const std::array<double, 7> mu_row = {14, 29, 43, 57, 71, 86, 100};
  const std::array<double, 7> sigma2_row = {12.2, 20.4, 24.5, 24.5, 20.4, 12.2, 0};
  for (long t = 1; t <= 7; ++t) {
    HyperStats stats = hyper_stats_color(1, 7, t, 100);
    double mu = to_double(stats.mu);
    double sigma2 = to_double(stats.sigma2);
    CHECK(std::abs(std::round(mu) - mu_row[static_cast<std::size_t>(t - 1)]) <= 0.5);
    CHECK(std::abs(sigma2 - sigma2_row[static_cast<std::size_t>(t - 1)]) <= 0.05);
  }
  CHECK(hyper_stats_color(1, 7, 1, 100).mu == Rational(100, 7));
  CHECK(hyper_stats_color(1, 7, 1, 100).sigma2 == Rational(3600, 294));
  CHECK(hyper_stats_color(1, 7, 4, 100).sigma2 == Rational(7200, 294));
}

TEST_CASE("region statistics agree with the distribution tables") {
  // mean and variance of the one-pixel table, scaled by N
  for (long m = 2; m <= 9; ++m)
    for (long a = 0; a <= m; ++a)
      for (long s = 1; s <= m; ++s) {
        DistributionTable table = subset_distribution(a, m - a, s);
        Rational mean(0), second(0);
        for (long j = 0; j <= s; ++j) {
          mean += Rational(j) * table.p[static_cast<std::size_t>(j)];
          second += Rational(j * j) * table.p[static_cast<std::size_t>(j)];
        }
        Rational var = second - mean * mean;
        const long N = 17;
        HyperStats stats = hyper_stats_gray(a, m, s, N);
        CHECK(stats.mu == Rational(N) * mean);
        CHECK(stats.sigma2 == Rational(N) * var);
      }
}

TEST_CASE("recognition bound, gray") {
  GrayScheme scheme = reference_gray();

  SUBCASE("reference value at s=1, d=1/20") {
    long n = recognition_area_gray(scheme.a[0], scheme.a[1], scheme.m_star, 1, frac("0.05"));
    CHECK(n == 624);
  }
  SUBCASE("full expansion needs no statistics") {
    CHECK(recognition_area_gray(2, 3, 6, 6, frac("0.05")) == 0);
  }
  SUBCASE("monotone in the margin") {
    long prev = 0;
    for (const char* d : {"0.01", "0.02", "0.05", "0.08", "0.1", "0.15"}) {
      long n = recognition_area_gray(2, 3, 6, 1, frac(d));
      CHECK(n >= prev);
      prev = n;
    }
  }
  SUBCASE("two-level form matches the probability formulation") {
    // p0 = (m-h)/m = 1/3, p1 = (m-l)/m = 2/3 for the (2,3,3) base at s=1
    GrayScheme binary = build_gvss(build_2_of_n(3), 2);
    double p0 = 1.0 / 3.0, p1 = 2.0 / 3.0, d = 0.05;
    double rhs = 9.0 * std::pow((std::sqrt(p0 * (1 - p0)) + std::sqrt(p1 * (1 - p1))) /
                                    (p1 - p0 - d),
                                2.0);
    long n = recognition_area_gray(binary.a[0], binary.a[1], binary.m_star, 1, frac("0.05"));
    CHECK(n == static_cast<long>(std::floor(rhs)) + 1);
  }
  SUBCASE("inadmissible margins") {
    CHECK_THROWS_AS(recognition_area_gray(2, 3, 6, 1, frac("0")), std::invalid_argument);
    // margin must stay below s*da/m* = 1/6
    CHECK_THROWS_AS(recognition_area_gray(2, 3, 6, 1, frac("1/6")), std::invalid_argument);
    CHECK_THROWS_AS(recognition_area_gray(2, 2, 6, 1, frac("0.05")), std::invalid_argument);
  }
}

TEST_CASE("recognition bound, color") {
  SUBCASE("reference value at t=1, d=1/20") {
    CHECK(recognition_area_color(1, 7, 1, frac("0.05")) == 128);
  }
  SUBCASE("full expansion") { CHECK(recognition_area_color(1, 7, 7, frac("0.05")) == 0); }
  SUBCASE("single-subpixel case reduces to 9(m-1)/(1-m d)^2") {
    for (long m : {3L, 5L, 7L, 11L}) {
      Rational d(1, 4 * m);  // safely inside (0, 1/m)
      long direct = recognition_area_color(1, m, 1, d);
      Rational denom = Rational(1) - Rational(m) * d;
      Rational rhs = Rational(9 * (m - 1)) / (denom * denom);
      Int floor_rhs;
      mpz_fdiv_q(floor_rhs.get_mpz_t(), rhs.get_num().get_mpz_t(), rhs.get_den().get_mpz_t());
      CHECK(direct == floor_rhs.get_si() + 1);
    }
  }
  SUBCASE("general and b=1 forms coincide at b=1") {
    for (long m = 2; m <= 9; ++m)
      for (long t = 1; t < m; ++t) {
        Rational d(1, 2 * m);  // < t*1/m' for every t >= 1
        Rational denom_general = Rational(t * 1) - Rational(m) * d;
        Rational general = Rational(Int(9) * t * (m - t) * 1 * (m - 1), Int(m - 1)) /
                           (denom_general * denom_general);
        Rational reduced = Rational(Int(9) * t * (m - t)) / (denom_general * denom_general);
        CHECK(general == reduced);
        CHECK(recognition_area_color(1, m, t, d) > 0);
      }
  }
  SUBCASE("inadmissible margins") {
    CHECK_THROWS_AS(recognition_area_color(1, 7, 1, frac("1/7")), std::invalid_argument);
    CHECK_THROWS_AS(recognition_area_color(1, 7, 1, frac("0")), std::invalid_argument);
  }
}

TEST_CASE("simulated regions track the exact statistics") {
  GrayScheme scheme = reference_gray();
  ProbConfig cfg{1, 424242};

  SUBCASE("level 0, s=1") {
    RegionHistogram hist = simulate_region_gray(scheme, 0, cfg, 100, 1500);
    CHECK(hist.mu == Rational(100, 3));
    CHECK(hist.empirical_mean ==
          doctest::Approx(to_double(hist.mu)).epsilon(0.01));
    CHECK(hist.empirical_var ==
          doctest::Approx(to_double(hist.sigma2)).epsilon(0.12));
    CHECK(hist.within_3sigma >= 0.99);
    long total = 0;
    for (const auto& [sn, count] : hist.counts) total += count;
    CHECK(total == 1500);
  }

  SUBCASE("deterministic at full expansion") {
    ProbConfig full{6, 1};
    RegionHistogram hist = simulate_region_gray(scheme, 1, full, 50, 200);
    CHECK(hist.sigma2 == 0);
    CHECK(hist.counts.size() == 1);
    CHECK(hist.counts.begin()->first == 150);  // 50 pixels x weight 3
    CHECK(hist.empirical_var == 0.0);
    CHECK(hist.within_3sigma == 1.0);
  }

  SUBCASE("color region") {
    ColorScheme color = reference_color();
    RegionHistogram hist = simulate_region_color(color, 0, cfg, 100, 1500);
    CHECK(hist.mu == Rational(100, 7));
    CHECK(hist.empirical_mean == doctest::Approx(100.0 / 7.0).epsilon(0.02));
    CHECK(hist.empirical_var == doctest::Approx(3600.0 / 294.0).epsilon(0.15));
  }

  SUBCASE("fixed seed reproduces the histogram") {
    RegionHistogram a = simulate_region_gray(scheme, 2, cfg, 40, 100);
    RegionHistogram b = simulate_region_gray(scheme, 2, cfg, 40, 100);
    CHECK(a.counts == b.counts);
  }

  SUBCASE("csv export") {
    RegionHistogram hist = simulate_region_gray(scheme, 0, cfg, 10, 20);
    std::ostringstream out;
    hist.write_csv(out);
    CHECK(out.str().rfind("sn,count\n", 0) == 0);
    CHECK(hist.stats_text().find("mu=") != std::string::npos);
  }
}

TEST_CASE("classifier behavior") {
  GrayScheme scheme = reference_gray();
  std::vector<int> candidates{0, 1, 2};

  SUBCASE("deterministic regions always classify exactly") {
    SecretImage secret;
    secret.width = 16;
    secret.height = 16;
    secret.color = false;
    secret.levels = 3;
    secret.pixels.assign(256, 1);
    ShareSet shares = prob_encode_gray(secret, scheme, ProbConfig{6, 3});
    std::vector<int> pair{0, 2};
    auto plane = stack(shares, pair);
    CHECK(classify_region_gray(plane, scheme, 6, candidates) == 1);
  }

  SUBCASE("classification at the bound size is reliable, far below it is not") {
    const long n_at_bound = 624;
    std::vector<int> adjacent{0, 1};
    auto misclassification_rate = [&](long region_pixels, std::uint64_t seed) {
      long errors = 0;
      const long regions = 1000;
      for (long r = 0; r < regions; ++r) {
        int true_level = static_cast<int>(r % 2);
        SecretImage secret;
        secret.width = static_cast<int>(region_pixels);
        secret.height = 1;
        secret.color = false;
        secret.levels = 3;
        secret.pixels.assign(static_cast<std::size_t>(region_pixels),
                             static_cast<std::uint8_t>(true_level));
        ShareSet shares = prob_encode_gray(secret, scheme, ProbConfig{1, seed + 1000 + static_cast<std::uint64_t>(r)});
        std::vector<int> pair{0, 1};
        auto plane = stack(shares, pair);
        if (classify_region_gray(plane, scheme, 1, adjacent) != true_level) ++errors;
      }
      return static_cast<double>(errors) / static_cast<double>(regions);
    };
    CHECK(misclassification_rate(n_at_bound, 10) < 0.01);
    CHECK(misclassification_rate(10, 20) > 0.01);
  }

  SUBCASE("color classifier needs the margin cleared") {
    ColorScheme color = reference_color();
    std::vector<int> colors{0, 1, 2};
    // deterministic stack of a color-2 region
    SecretImage secret;
    secret.width = 32;
    secret.height = 4;
    secret.color = true;
    secret.levels = 3;
    secret.palette = {{255, 0, 0}, {0, 255, 0}, {0, 0, 255}};
    secret.pixels.assign(128, 2);
    ShareSet shares = prob_encode_color(secret, color, ProbConfig{7, 9});
    std::vector<int> pair{1, 2};
    auto plane = stack(shares, pair);
    CHECK(classify_region_color(plane, color, 7, colors, frac("0.05")) == 2);
    // an impossible margin rejects everything
    CHECK(classify_region_color(plane, color, 7, colors, Rational(2)) == -1);
  }

  SUBCASE("guards") {
    std::vector<std::uint8_t> region;
    CHECK_THROWS_AS(classify_region_gray(region, scheme, 1, candidates), std::invalid_argument);
  }
}
