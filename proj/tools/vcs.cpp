// Command-line front end: build/validate schemes, encode secrets into share
// images, stack shares, and run the distribution/recognition/simulation
// analyses.
//
// Exit codes: 0 success or valid scheme, 1 invalid scheme, 2 usage error,
// 3 I/O error.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vcs/analysis.hpp"
#include "vcs/image.hpp"
#include "vcs/prob.hpp"
#include "vcs/scheme_io.hpp"
#include "vcs/util.hpp"

namespace {

int g_status = 0;

struct BuildArgs {
  std::string type;
  int k = 0;
  int n = 0;
  int g = 0;
  int c = 0;
  std::string base_path;
  std::string out_path;
};

struct EncodeArgs {
  std::string scheme_path;
  std::string secret_path;
  long s = 1;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string prefix = "share";
  std::string palette;
};

struct StackArgs {
  std::string out_path;
  std::vector<std::string> share_paths;
};

struct AnalyzeArgs {
  std::string scheme_path;
  long s = 1;
  std::string levels;  // "i,j" for the gray recognition bound
  int level = -1;
  int color = -1;
  std::string d;
  long region = 100;
  long trials = 3000;
  std::uint64_t seed = 0;
  std::string out_path;
};

vcs::BinaryScheme make_base(int k, int n) {
  if (k == 2) return vcs::build_2_of_n(n);
  if (k == n) return vcs::build_n_of_n(n);
  throw CLI::ValidationError(
      "scheme build", "no built-in (k,n) construction for k=" + std::to_string(k) +
                          ", n=" + std::to_string(n) + "; supply --base");
}

// Gray view of a scheme file: binary schemes encode as their two-level form.
vcs::GrayScheme as_gray(const vcs::AnyScheme& scheme) {
  if (const auto* bin = std::get_if<vcs::BinaryScheme>(&scheme)) return vcs::build_gvss(*bin, 2);
  if (const auto* gray = std::get_if<vcs::GrayScheme>(&scheme)) return *gray;
  throw CLI::ValidationError("scheme", "expected a binary or gray scheme file");
}

std::vector<vcs::Rgb> parse_palette(const std::string& list) {
  std::vector<vcs::Rgb> palette;
  std::istringstream in(list);
  std::string tok;
  while (std::getline(in, tok, ',')) palette.push_back(vcs::rgb_from_hex(tok));
  return palette;
}

void cmd_scheme_build(const BuildArgs& args) {
  vcs::AnyScheme scheme = [&]() -> vcs::AnyScheme {
    if (args.type == "2n") return vcs::build_2_of_n(args.n);
    if (args.type == "nn") return vcs::build_n_of_n(args.n);
    if (args.type == "gvss") {
      if (args.g < 2) throw CLI::ValidationError("--g", "gvss needs --g >= 2");
      vcs::BinaryScheme base = [&] {
        if (!args.base_path.empty()) {
          auto loaded = vcs::load_scheme_file(args.base_path);
          if (auto* bin = std::get_if<vcs::BinaryScheme>(&loaded)) return std::move(*bin);
          throw CLI::ValidationError("--base", "base file must hold a VSS scheme");
        }
        return make_base(args.k == 0 ? 2 : args.k, args.n);
      }();
      return vcs::build_gvss(base, args.g);
    }
    if (args.type == "cvss") {
      if (args.c < 2) throw CLI::ValidationError("--c", "cvss needs --c >= 2");
      if (args.k != 0 && args.k != 2)
        throw CLI::ValidationError("--k", "the built-in color construction is k=2");
      return vcs::build_color_2n(args.c, args.n);
    }
    throw CLI::ValidationError("--type", "unknown scheme type '" + args.type + "'");
  }();

  vcs::save_scheme_file(args.out_path, scheme);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, vcs::BinaryScheme>) {
          std::cout << "kind=VSS k=" << s.k << " n=" << s.n << " m=" << s.m << " h=" << s.h
                    << " l=" << s.l << " alpha=" << vcs::to_string(s.alpha) << '\n';
        } else if constexpr (std::is_same_v<T, vcs::GrayScheme>) {
          std::cout << "kind=GVSS k=" << s.k << " n=" << s.n << " m=" << s.m_base
                    << " g=" << s.g << " m_star=" << s.m_star << " alpha_levels=";
          for (std::size_t i = 0; i < s.alpha_levels.size(); ++i)
            std::cout << (i ? "," : "") << vcs::to_string(s.alpha_levels[i]);
          std::cout << '\n';
        } else {
          std::cout << "kind=CVSS k=" << s.k << " n=" << s.n << " m_prime=" << s.m_prime
                    << " c=" << s.c << " h=" << s.h << " l=" << s.l
                    << " alpha_prime=" << vcs::to_string(s.alpha_prime.front()) << '\n';
        }
      },
      scheme);
  std::cout << "scheme_hash=" << vcs::scheme_hash(scheme) << '\n';
  std::cout << "wrote " << args.out_path << '\n';
}

void cmd_scheme_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw vcs::IoError("cannot open scheme file: " + path);
  vcs::RawScheme raw = vcs::read_scheme_raw(in);
  vcs::ValidationReport report;
  if (raw.kind == "VSS")
    report = vcs::validate_binary_scheme(raw.bool_blocks[0], raw.bool_blocks[1], raw.k);
  else if (raw.kind == "GVSS")
    report = vcs::validate_gvss(raw.bool_blocks, raw.k);
  else
    report = vcs::validate_color_scheme(raw.color_blocks, raw.k);
  std::cout << "kind=" << raw.kind << '\n' << report.to_text();
  g_status = report.valid ? 0 : 1;
}

void cmd_encode(const EncodeArgs& args) {
  vcs::AnyScheme scheme = vcs::load_scheme_file(args.scheme_path);
  vcs::ProbConfig cfg{args.s, args.seed};

  vcs::ShareSet shares = [&] {
    if (const auto* color = std::get_if<vcs::ColorScheme>(&scheme)) {
      if (args.palette.empty())
        throw CLI::ValidationError("--palette", "color schemes need a display palette");
      auto palette = parse_palette(args.palette);
      if (static_cast<int>(palette.size()) != color->c)
        throw CLI::ValidationError("--palette", "palette size must match the scheme's colors");
      vcs::SecretImage secret = vcs::load_color(args.secret_path, palette);
      return vcs::prob_encode_color(secret, *color, cfg);
    }
    vcs::GrayScheme gray = as_gray(scheme);
    vcs::SecretImage secret = vcs::load_gray(args.secret_path, gray.g);
    return vcs::prob_encode_gray(secret, gray, cfg);
  }();

  std::filesystem::create_directories(args.out_dir);
  const char* ext = shares.color ? ".ppm" : ".pbm";
  for (int i = 0; i < shares.n; ++i) {
    auto share = vcs::share_from_set(shares, i);
    std::string path = args.out_dir + "/" + args.prefix + std::to_string(i) + ext;
    vcs::write_share(share, path);
    std::cout << "wrote " << path << '\n';
  }
  std::cout << "scheme_hash=" << shares.scheme_hash << " s=" << shares.s
            << " seed=" << shares.seed << '\n';
}

void cmd_stack(const StackArgs& args) {
  std::vector<vcs::ShareImage> shares;
  shares.reserve(args.share_paths.size());
  for (const auto& path : args.share_paths) shares.push_back(vcs::read_share(path));
  vcs::ShareSet set = vcs::share_set_from_images(shares);
  std::vector<int> subset(shares.size());
  for (std::size_t i = 0; i < subset.size(); ++i) subset[i] = static_cast<int>(i);
  auto plane = vcs::stack(set, subset);

  const int width = static_cast<int>(set.plane_width());
  if (set.color) {
    std::vector<std::uint8_t> rgb(plane.size() * 3, 0);
    for (std::size_t i = 0; i < plane.size(); ++i) {
      if (plane[i] == 0xFF) continue;
      const auto& px = set.palette.at(plane[i]);
      rgb[3 * i] = px[0];
      rgb[3 * i + 1] = px[1];
      rgb[3 * i + 2] = px[2];
    }
    vcs::write_ppm(args.out_path, width, set.height, rgb);
  } else {
    vcs::write_pbm(args.out_path, width, set.height, plane);
  }
  std::cout << "wrote " << args.out_path << " (" << width << "x" << set.height << ", "
            << shares.size() << " shares stacked)\n";
}

void write_distribution_csv(std::ostream& out, const std::vector<vcs::DistributionTable>& tables) {
  if (tables.empty()) return;
  out << "index";
  for (long j = 0; j <= tables.front().s; ++j) out << ",p" << j;
  out << ",H_bar,beta_bar\n";
  for (const auto& table : tables) {
    out << table.index;
    for (const auto& p : table.p) out << ',' << vcs::to_string(p);
    out << ',' << vcs::to_string(table.h_bar) << ',' << vcs::to_string(table.beta_bar) << '\n';
  }
}

void cmd_analyze_distribution(const AnalyzeArgs& args) {
  vcs::AnyScheme scheme = vcs::load_scheme_file(args.scheme_path);
  std::vector<vcs::DistributionTable> tables;
  if (const auto* color = std::get_if<vcs::ColorScheme>(&scheme)) {
    for (int i = 0; i < color->c; ++i) tables.push_back(vcs::color_distribution(*color, i, args.s));
  } else {
    vcs::GrayScheme gray = as_gray(scheme);
    for (int i = 0; i < gray.g; ++i) tables.push_back(vcs::level_distribution(gray, i, args.s));
  }
  if (args.out_path.empty()) {
    write_distribution_csv(std::cout, tables);
  } else {
    std::ofstream out(args.out_path);
    if (!out) throw vcs::IoError("cannot write: " + args.out_path);
    write_distribution_csv(out, tables);
    std::cout << "wrote " << args.out_path << '\n';
  }
}

void cmd_analyze_recognition(const AnalyzeArgs& args) {
  vcs::AnyScheme scheme = vcs::load_scheme_file(args.scheme_path);
  vcs::Rational d = vcs::parse_rational(args.d);
  long n_min = 0;
  if (const auto* color = std::get_if<vcs::ColorScheme>(&scheme)) {
    if (args.color < 0) throw CLI::ValidationError("--color", "color schemes need --color");
    if (args.color >= color->c) throw CLI::ValidationError("--color", "color out of range");
    n_min = vcs::recognition_area_color(color->b[static_cast<std::size_t>(args.color)],
                                        color->m_prime, args.s, d);
  } else {
    vcs::GrayScheme gray = as_gray(scheme);
    if (args.levels.empty())
      throw CLI::ValidationError("--levels", "gray schemes need --levels i,j");
    int li = 0, lj = 0;
    char comma = 0;
    std::istringstream pair(args.levels);
    if (!(pair >> li >> comma >> lj) || comma != ',')
      throw CLI::ValidationError("--levels", "expected two levels as i,j");
    if (li < 0 || li >= gray.g || lj < 0 || lj >= gray.g)
      throw CLI::ValidationError("--levels", "level out of range");
    n_min = vcs::recognition_area_gray(gray.a[static_cast<std::size_t>(li)],
                                       gray.a[static_cast<std::size_t>(lj)], gray.m_star, args.s,
                                       d);
  }
  std::cout << "N_min=" << n_min << '\n';
}

void cmd_analyze_simulate(const AnalyzeArgs& args) {
  vcs::AnyScheme scheme = vcs::load_scheme_file(args.scheme_path);
  vcs::ProbConfig cfg{args.s, args.seed};
  vcs::RegionHistogram hist = [&] {
    if (const auto* color = std::get_if<vcs::ColorScheme>(&scheme)) {
      if (args.color < 0) throw CLI::ValidationError("--color", "color schemes need --color");
      return vcs::simulate_region_color(*color, args.color, cfg, args.region, args.trials);
    }
    vcs::GrayScheme gray = as_gray(scheme);
    int level = args.level < 0 ? 0 : args.level;
    return vcs::simulate_region_gray(gray, level, cfg, args.region, args.trials);
  }();

  if (args.out_path.empty()) {
    hist.write_csv(std::cout);
  } else {
    std::ofstream out(args.out_path);
    if (!out) throw vcs::IoError("cannot write: " + args.out_path);
    hist.write_csv(out);
    std::ofstream stats(args.out_path + ".stats");
    if (!stats) throw vcs::IoError("cannot write: " + args.out_path + ".stats");
    stats << hist.stats_text();
    std::cout << hist.stats_text();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic and probabilistic visual secret sharing toolkit"};
  app.require_subcommand(1);

  BuildArgs build_args;
  EncodeArgs encode_args;
  StackArgs stack_args;
  AnalyzeArgs dist_args, recog_args, sim_args;
  std::string validate_path;

  auto* scheme_cmd = app.add_subcommand("scheme", "build or validate scheme files");
  scheme_cmd->require_subcommand(1);
  auto* build_cmd = scheme_cmd->add_subcommand("build", "construct a scheme and write it");
  build_cmd->add_option("--type", build_args.type, "2n | nn | gvss | cvss")->required();
  build_cmd->add_option("--k", build_args.k, "threshold (gvss base selection)");
  build_cmd->add_option("--n", build_args.n, "number of shares")->required();
  build_cmd->add_option("--g", build_args.g, "grey levels (gvss)");
  build_cmd->add_option("--c", build_args.c, "colors (cvss)");
  build_cmd->add_option("--base", build_args.base_path, "VSS scheme file to use as gvss base");
  build_cmd->add_option("-o,--out", build_args.out_path, "output scheme file")->required();
  build_cmd->callback([&] { cmd_scheme_build(build_args); });

  auto* validate_cmd = scheme_cmd->add_subcommand("validate", "check a scheme file");
  validate_cmd->add_option("--scheme", validate_path, "scheme file")->required();
  validate_cmd->callback([&] { cmd_scheme_validate(validate_path); });

  auto* encode_cmd = app.add_subcommand("encode", "split a secret image into shares");
  encode_cmd->add_option("--scheme", encode_args.scheme_path, "scheme file")->required();
  encode_cmd->add_option("--secret", encode_args.secret_path, "secret image (PGM/PPM)")
      ->required();
  encode_cmd->add_option("--s,--t", encode_args.s, "pixel expansion (columns drawn per pixel)")
      ->required();
  encode_cmd->add_option("--seed", encode_args.seed, "64-bit RNG seed");
  encode_cmd->add_option("--out-dir", encode_args.out_dir, "output directory")->required();
  encode_cmd->add_option("--prefix", encode_args.prefix, "share filename prefix");
  encode_cmd->add_option("--palette", encode_args.palette,
                         "display colors for color schemes, e.g. ff0000,00ff00,0000ff");
  encode_cmd->callback([&] { cmd_encode(encode_args); });

  auto* stack_cmd = app.add_subcommand("stack", "overlay share images");
  stack_cmd->add_option("--out", stack_args.out_path, "reconstructed image path")->required();
  stack_cmd->add_option("shares", stack_args.share_paths, "share image files")
      ->required()
      ->expected(-1);
  stack_cmd->callback([&] { cmd_stack(stack_args); });

  auto* analyze_cmd = app.add_subcommand("analyze", "distribution tables, bounds, simulations");
  analyze_cmd->require_subcommand(1);

  auto* dist_cmd = analyze_cmd->add_subcommand("distribution", "exact stacked-count tables");
  dist_cmd->add_option("--scheme", dist_args.scheme_path, "scheme file")->required();
  dist_cmd->add_option("--s,--t", dist_args.s, "pixel expansion")->required();
  dist_cmd->add_option("-o,--out", dist_args.out_path, "CSV output (stdout when omitted)");
  dist_cmd->callback([&] { cmd_analyze_distribution(dist_args); });

  auto* recog_cmd = analyze_cmd->add_subcommand("recognition", "minimum recognizable region size");
  recog_cmd->add_option("--scheme", recog_args.scheme_path, "scheme file")->required();
  recog_cmd->add_option("--s,--t", recog_args.s, "pixel expansion")->required();
  recog_cmd->add_option("--d", recog_args.d, "separation margin (decimal or fraction)")
      ->required();
  recog_cmd->add_option("--levels", recog_args.levels, "gray level pair i,j");
  recog_cmd->add_option("--color", recog_args.color, "color index");
  recog_cmd->callback([&] { cmd_analyze_recognition(recog_args); });

  auto* sim_cmd = analyze_cmd->add_subcommand("simulate", "Monte Carlo region histograms");
  sim_cmd->add_option("--scheme", sim_args.scheme_path, "scheme file")->required();
  sim_cmd->add_option("--s,--t", sim_args.s, "pixel expansion")->required();
  sim_cmd->add_option("--level", sim_args.level, "gray level (default 0)");
  sim_cmd->add_option("--color", sim_args.color, "color index");
  sim_cmd->add_option("--N", sim_args.region, "pixels per region")->required();
  sim_cmd->add_option("--trials", sim_args.trials, "number of regions")->required();
  sim_cmd->add_option("--seed", sim_args.seed, "64-bit RNG seed");
  sim_cmd->add_option("-o,--out", sim_args.out_path,
                      "histogram CSV path; stats go to <out>.stats");
  sim_cmd->callback([&] { cmd_analyze_simulate(sim_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const vcs::SchemeError& e) {
    std::cerr << "invalid scheme: " << e.what() << '\n';
    return 1;
  } catch (const vcs::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return g_status;
}
