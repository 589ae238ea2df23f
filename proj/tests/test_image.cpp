#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "vcs/image.hpp"
#include "vcs/prob.hpp"
#include "vcs/scheme_io.hpp"
#include "vcs/util.hpp"

using namespace vcs;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("vcs-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter()++));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
  static int& counter() {
    static int c = 0;
    return c;
  }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

}  // namespace

TEST_CASE("pgm reading and quantization") {
  TempDir dir;

  SUBCASE("ascii gray maps into level buckets") {
    write_file(dir.file("a.pgm"), "P2\n3 1\n255\n0 128 255\n");
    SecretImage img = load_gray(dir.file("a.pgm"), 3);
    CHECK(img.width == 3);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 1, 2});
  }

  SUBCASE("binary gray with comments") {
    std::string header = "P5\n# a comment\n2 2\n255\n";
    std::string data = {'\x00', '\x00', '\xff', '\xff'};
    write_file(dir.file("b.pgm"), header + data);
    SecretImage img = load_gray(dir.file("b.pgm"), 3);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 0, 2, 2});
  }

  SUBCASE("all-zero and all-max images use the extreme buckets") {
    write_file(dir.file("z.pgm"), "P2\n2 1\n255\n0 0\n");
    CHECK(load_gray(dir.file("z.pgm"), 3).pixels == std::vector<std::uint8_t>{0, 0});
    write_file(dir.file("m.pgm"), "P2\n2 1\n255\n255 255\n");
    CHECK(load_gray(dir.file("m.pgm"), 3).pixels == std::vector<std::uint8_t>{2, 2});
  }

  SUBCASE("quantization is monotone and covers every level") {
    write_file(dir.file("ramp.pgm"), [&] {
      std::string s = "P2\n256 1\n255\n";
      for (int v = 0; v < 256; ++v) s += std::to_string(v) + " ";
      return s;
    }());
    for (int g : {2, 3, 5, 8}) {
      SecretImage img = load_gray(dir.file("ramp.pgm"), g);
      std::vector<bool> seen(static_cast<std::size_t>(g), false);
      int prev = 0;
      for (std::uint8_t level : img.pixels) {
        CHECK(level >= prev);
        prev = level;
        CHECK(level < g);
        seen[level] = true;
      }
      for (bool hit : seen) CHECK(hit);
    }
  }

  SUBCASE("rejects colored input and bad files") {
    write_file(dir.file("c.ppm"), "P3\n1 1\n255\n1 2 3\n");
    CHECK_THROWS_AS(load_gray(dir.file("c.ppm"), 3), IoError);
    write_file(dir.file("garbage.pgm"), "Q5\n1 1\n255\n0\n");
    CHECK_THROWS_AS(load_gray(dir.file("garbage.pgm"), 3), IoError);
    CHECK_THROWS_AS(load_gray(dir.file("missing.pgm"), 3), IoError);
    write_file(dir.file("trunc.pgm"), "P2\n2 2\n255\n0 0 0\n");
    CHECK_THROWS_AS(load_gray(dir.file("trunc.pgm"), 3), IoError);
  }
}

TEST_CASE("ppm palette matching") {
  TempDir dir;
  const std::vector<Rgb> palette{{255, 0, 0}, {0, 255, 0}, {0, 0, 255}};

  SUBCASE("exact palette image loads") {
    write_file(dir.file("c.ppm"), "P3\n3 1\n255\n255 0 0 0 255 0 0 0 255\n");
    SecretImage img = load_color(dir.file("c.ppm"), palette);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 1, 2});
    CHECK(img.palette == palette);
  }

  SUBCASE("an off-palette pixel is reported with its coordinates") {
    write_file(dir.file("bad.ppm"), "P3\n2 1\n255\n255 0 0 1 0 0\n");
    try {
      load_color(dir.file("bad.ppm"), palette);
      FAIL("expected an error");
    } catch (const IoError& e) {
      std::string msg = e.what();
      CHECK(msg.find("(1,0)") != std::string::npos);
    }
  }

  SUBCASE("palette validation") {
    write_file(dir.file("c.ppm"), "P3\n1 1\n255\n255 0 0\n");
    CHECK_THROWS_AS(load_color(dir.file("c.ppm"), {{255, 0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(load_color(dir.file("c.ppm"), {{255, 0, 0}, {0, 0, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(load_color(dir.file("c.ppm"), {{255, 0, 0}, {255, 0, 0}}),
                    std::invalid_argument);
  }
}

TEST_CASE("pbm round trip") {
  TempDir dir;
  // width 10 exercises row padding
  std::vector<std::uint8_t> bits(10 * 3);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (i * 7 % 3) == 0 ? 1 : 0;
  write_pbm(dir.file("x.pbm"), 10, 3, bits);
  PnmImage img = read_pnm(dir.file("x.pbm"));
  CHECK(img.format == 4);
  CHECK(img.width == 10);
  CHECK(std::vector<std::uint8_t>(img.samples.begin(), img.samples.end()) == bits);

  // ascii bitmap reads the same way, with or without spacing
  write_file(dir.file("y.pbm"), "P1\n5 1\n10110\n");
  PnmImage ascii = read_pnm(dir.file("y.pbm"));
  CHECK(std::vector<std::uint8_t>(ascii.samples.begin(), ascii.samples.end()) ==
        std::vector<std::uint8_t>{1, 0, 1, 1, 0});
}

TEST_CASE("share files round-trip bit-exactly") {
  TempDir dir;

  SUBCASE("binary share") {
    GrayScheme scheme = build_gvss(build_2_of_n(3), 3);
    SecretImage secret;
    secret.width = 9;
    secret.height = 5;
    secret.color = false;
    secret.levels = 3;
    secret.pixels.assign(45, 0);
    for (std::size_t i = 0; i < secret.pixels.size(); ++i)
      secret.pixels[i] = static_cast<std::uint8_t>(i % 3);
    ShareSet shares = prob_encode_gray(secret, scheme, ProbConfig{5, 77});

    for (int i = 0; i < shares.n; ++i) {
      ShareImage share = share_from_set(shares, i);
      std::string path = dir.file("s" + std::to_string(i) + ".pbm");
      write_share(share, path);
      ShareImage back = read_share(path);
      CHECK(back.plane == share.plane);
      CHECK(back.scheme_hash == share.scheme_hash);
      CHECK(back.s == share.s);
      CHECK(back.seed == share.seed);
      CHECK(back.share_index == i);
    }

    // stacking written shares equals stacking in memory
    std::vector<ShareImage> loaded;
    for (int i = 0; i < shares.n; ++i)
      loaded.push_back(read_share(dir.file("s" + std::to_string(i) + ".pbm")));
    ShareSet reloaded = share_set_from_images(loaded);
    std::vector<int> pair{0, 2};
    CHECK(stack(reloaded, pair) == stack(shares, pair));
  }

  SUBCASE("color share") {
    ColorScheme scheme = build_color_2n(3, 3);
    SecretImage secret;
    secret.width = 4;
    secret.height = 4;
    secret.color = true;
    secret.levels = 3;
    secret.palette = {{255, 0, 0}, {0, 255, 0}, {0, 0, 255}};
    secret.pixels.assign(16, 2);
    ShareSet shares = prob_encode_color(secret, scheme, ProbConfig{3, 11});
    ShareImage share = share_from_set(shares, 1);
    std::string path = dir.file("c1.ppm");
    write_share(share, path);
    ShareImage back = read_share(path);
    CHECK(back.plane == share.plane);
    CHECK(back.palette == share.palette);
    CHECK(back.color);
  }

  SUBCASE("no expansion keeps the share the same size as the secret") {
    GrayScheme scheme = build_gvss(build_2_of_n(2), 2);
    SecretImage secret;
    secret.width = 7;
    secret.height = 3;
    secret.color = false;
    secret.levels = 2;
    secret.pixels.assign(21, 1);
    ShareSet shares = prob_encode_gray(secret, scheme, ProbConfig{1, 0});
    write_share(share_from_set(shares, 0), dir.file("flat.pbm"));
    PnmImage img = read_pnm(dir.file("flat.pbm"));
    CHECK(img.width == 7);
    CHECK(img.height == 3);
  }
}

TEST_CASE("metadata mismatches are rejected") {
  TempDir dir;
  GrayScheme scheme = build_gvss(build_2_of_n(3), 3);
  SecretImage secret;
  secret.width = 4;
  secret.height = 4;
  secret.color = false;
  secret.levels = 3;
  secret.pixels.assign(16, 1);

  ShareSet a = prob_encode_gray(secret, scheme, ProbConfig{2, 1});
  ShareSet b = prob_encode_gray(secret, scheme, ProbConfig{2, 2});  // different seed

  write_share(share_from_set(a, 0), dir.file("a0.pbm"));
  write_share(share_from_set(b, 1), dir.file("b1.pbm"));
  std::vector<ShareImage> mixed{read_share(dir.file("a0.pbm")), read_share(dir.file("b1.pbm"))};
  CHECK_THROWS_AS(share_set_from_images(mixed), IoError);

  SUBCASE("tampered sidecar") {
    write_share(share_from_set(a, 0), dir.file("t.pbm"));
    std::ofstream meta(dir.file("t.pbm") + ".meta", std::ios::app);
    meta << "not a key value line\n";
    meta.close();
    CHECK_THROWS_AS(read_share(dir.file("t.pbm")), IoError);
  }
}
