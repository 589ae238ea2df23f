#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <sstream>

#include "oracles.hpp"
#include "vcs/color_scheme.hpp"
#include "vcs/scheme_io.hpp"
#include "vcs/util.hpp"

using namespace vcs;

namespace {

ColorMatrix cmat(int rows, int cols, int palette, const std::string& tokens) {
  std::istringstream in(std::to_string(rows) + " " + std::to_string(cols) + " color " +
                        std::to_string(palette) + "\n" + tokens);
  return std::get<ColorMatrix>(read_matrix_text(in));
}

}  // namespace

TEST_CASE("three-color three-share construction") {
  ColorScheme scheme = build_color_2n(3, 3);
  CHECK(scheme.m_prime == 7);
  CHECK(scheme.h == 1);
  CHECK(scheme.l == 0);
  CHECK(scheme.alpha_prime.front() == Rational(1, 7));

  // with palette order (0,1,2): color-0 matrix leads with its own column,
  // then one diagonal block per other color; the others are transpositions.
  CHECK(scheme.C[0] == cmat(3, 7, 3,
                            "0 1 B B 2 B B\n"
                            "0 B 1 B B 2 B\n"
                            "0 B B 1 B B 2\n"));
  CHECK(scheme.C[1] == cmat(3, 7, 3,
                            "1 0 B B 2 B B\n"
                            "1 B 0 B B 2 B\n"
                            "1 B B 0 B B 2\n"));
  CHECK(scheme.C[2] == cmat(3, 7, 3,
                            "2 1 B B 0 B B\n"
                            "2 B 1 B B 0 B\n"
                            "2 B B 1 B B 0\n"));
}

TEST_CASE("small instances and the optimality bound") {
  SUBCASE("c=2, n=2") {
    ColorScheme scheme = build_color_2n(2, 2);
    CHECK(scheme.m_prime == 3);
    CHECK(scheme.h == 1);
    CHECK(validate_color_scheme(scheme.C, 2).valid);
  }
  SUBCASE("c=3, n=2 meets the even-n bound with equality") {
    ColorScheme scheme = build_color_2n(3, 2);
    CHECK(scheme.m_prime == 5);
    CHECK(lemma3_bounds(3, 2).m_min == 5);
  }
  SUBCASE("bound values") {
    CHECK(lemma3_bounds(3, 2).m_min == 5);
    CHECK(lemma3_bounds(3, 2).alpha_opt == Rational(1, 5));
    CHECK(lemma3_bounds(3, 3).m_min == 10);
    CHECK(lemma3_bounds(2, 2).m_min == 3);
    CHECK(lemma3_bounds(2, 4).m_min == 15);
    CHECK(lemma3_bounds(2, 5).m_min == 31);
  }
}

TEST_CASE("stacking any k shares reconstructs exactly h own-color subpixels") {
  for (int c = 2; c <= 4; ++c) {
    for (int n = 2; n <= 4; ++n) {
      ColorScheme scheme = build_color_2n(c, n);
      for (int i = 0; i < c; ++i) {
        for_each_combination(n, 2, [&](const std::vector<int>& rows) {
          auto stacked = or_rows(scheme.C[static_cast<std::size_t>(i)], rows);
          CHECK(color_count(stacked, i) == static_cast<std::size_t>(scheme.h));
          for (int j = 0; j < c; ++j)
            if (j != i) CHECK(color_count(stacked, j) == 0);
          CHECK(black_count(stacked) ==
                static_cast<std::size_t>(scheme.m_prime - scheme.h));
        });
      }
    }
  }
}

TEST_CASE("single-row restriction shows every color once and black elsewhere") {
  ColorScheme scheme = build_color_2n(3, 3);
  for (int i = 0; i < scheme.c; ++i) {
    for (int r = 0; r < scheme.n; ++r) {
      std::vector<int> rows{r};
      auto row = or_rows(scheme.C[static_cast<std::size_t>(i)], rows);
      for (int j = 0; j < scheme.c; ++j) CHECK(color_count(row, j) == 1);
      CHECK(black_count(row) == static_cast<std::size_t>(scheme.m_prime - scheme.c));
    }
  }
}

TEST_CASE("construction satisfies all conditions across the test range") {
  for (int c = 2; c <= 6; ++c)
    for (int n = 2; n <= 6; ++n) {
      ColorScheme scheme = build_color_2n(c, n);
      ValidationReport report = validate_color_scheme(scheme.C, 2);
      CHECK(report.valid);
      CHECK(report.h == 1);
      CHECK(report.l == 0);
    }
}

TEST_CASE("validator failures") {
  ColorScheme ex = build_color_2n(3, 3);

  SUBCASE("one collection reused for every color kills contrast") {
    std::vector<ColorMatrix> same{ex.C[0], ex.C[0], ex.C[0]};
    ValidationReport report = validate_color_scheme(same, 2);
    CHECK(report.secure);  // identical collections are trivially indistinguishable
    CHECK(report.h == 0);  // stacked color-1 pixels contain no color-1 subpixel
    CHECK_FALSE(report.valid);
  }

  SUBCASE("repainting the own-color column breaks the contrast condition") {
    auto cells = ex.C[1].cells();
    for (int r = 0; r < 3; ++r) cells[static_cast<std::size_t>(r) * 7] = 0;  // color 1 -> 0
    std::vector<ColorMatrix> tampered{ex.C[0], ColorMatrix(3, 7, 3, cells), ex.C[2]};
    ValidationReport report = validate_color_scheme(tampered, 2);
    CHECK_FALSE(report.valid);
  }

  SUBCASE("shape and palette preconditions") {
    std::vector<ColorMatrix> mixed{ex.C[0], ColorMatrix(3, 6, 3, std::vector<std::uint8_t>(
                                                                     18, ColorSymbol::kBlackCode))};
    CHECK_THROWS_AS(validate_color_scheme(mixed, 2), std::invalid_argument);
  }
}

TEST_CASE("parameter split under the zero-off-color regime") {
  ColorScheme ex = build_color_2n(3, 3);
  CvssParams params = cvss_params(ex);
  CHECK(params.e == 0);
  CHECK(params.a == std::vector<long>{6, 6, 6});
  CHECK(params.b == std::vector<long>{1, 1, 1});

  ColorScheme small = build_color_2n(2, 2);
  CvssParams small_params = cvss_params(small);
  CHECK(small_params.a == std::vector<long>{2, 2});
  CHECK(small_params.b == std::vector<long>{1, 1});
}

TEST_CASE("scheme file round-trip") {
  ColorScheme scheme = build_color_2n(3, 3);
  std::ostringstream out;
  write_scheme(out, scheme);
  std::istringstream in(out.str());
  AnyScheme loaded = read_scheme(in);
  const auto& back = std::get<ColorScheme>(loaded);
  CHECK(back.C == scheme.C);
  CHECK(back.h == scheme.h);
  CHECK(back.b == scheme.b);
}

TEST_CASE("construction guards") {
  CHECK_THROWS_AS(build_color_2n(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_color_2n(3, 1), std::invalid_argument);
}
