#include "vcs/image.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "vcs/util.hpp"

namespace vcs {

namespace {

// Skips whitespace and '#' comments between header tokens.
void skip_header_space(std::istream& in) {
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      while (c != '\n' && c != EOF) c = in.get();
    } else if (c != EOF && std::isspace(c)) {
      in.get();
    } else {
      return;
    }
  }
}

int read_header_int(std::istream& in, const std::string& path) {
  skip_header_space(in);
  int value = 0;
  if (!(in >> value) || value < 0) throw IoError(path + ": malformed netpbm header");
  return value;
}

std::string meta_path(const std::string& image_path) { return image_path + ".meta"; }

std::map<std::string, std::string> read_meta(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open share metadata: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw IoError(path + ": malformed metadata line: " + line);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  return kv;
}

const std::string& meta_get(const std::map<std::string, std::string>& kv, const std::string& key,
                            const std::string& path) {
  auto it = kv.find(key);
  if (it == kv.end()) throw IoError(path + ": missing metadata key '" + key + "'");
  return it->second;
}

}  // namespace

PnmImage read_pnm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image: " + path);
  char p = 0, digit = 0;
  in.get(p);
  in.get(digit);
  if (p != 'P' || digit < '1' || digit > '6') throw IoError(path + ": not a netpbm file");

  PnmImage img;
  img.format = digit - '0';
  img.width = read_header_int(in, path);
  img.height = read_header_int(in, path);
  if (img.width < 1 || img.height < 1) throw IoError(path + ": bad dimensions");
  const bool bitmap = img.format == 1 || img.format == 4;
  img.maxval = bitmap ? 1 : read_header_int(in, path);
  if (!bitmap && (img.maxval < 1 || img.maxval > 65535)) throw IoError(path + ": bad maxval");

  const int channels = (img.format == 3 || img.format == 6) ? 3 : 1;
  const std::size_t count = static_cast<std::size_t>(img.width) *
                            static_cast<std::size_t>(img.height) *
                            static_cast<std::size_t>(channels);
  img.samples.resize(count);

  switch (img.format) {
    case 1: {
      for (auto& s : img.samples) {
        int c = in.get();
        while (c != EOF && (std::isspace(c) || c == '#')) {
          if (c == '#')
            while (c != '\n' && c != EOF) c = in.get();
          c = in.get();
        }
        if (c != '0' && c != '1') throw IoError(path + ": bad P1 sample");
        s = static_cast<std::uint16_t>(c - '0');
      }
      break;
    }
    case 2:
    case 3: {
      for (auto& s : img.samples) {
        skip_header_space(in);
        int v;
        if (!(in >> v) || v < 0 || v > img.maxval) throw IoError(path + ": bad ASCII sample");
        s = static_cast<std::uint16_t>(v);
      }
      break;
    }
    case 4: {
      in.get();  // single whitespace after header
      const int row_bytes = (img.width + 7) / 8;
      std::vector<char> row(static_cast<std::size_t>(row_bytes));
      for (int y = 0; y < img.height; ++y) {
        if (!in.read(row.data(), row_bytes)) throw IoError(path + ": truncated P4 data");
        for (int x = 0; x < img.width; ++x) {
          unsigned byte = static_cast<unsigned char>(row[static_cast<std::size_t>(x / 8)]);
          img.samples[static_cast<std::size_t>(y) * static_cast<std::size_t>(img.width) +
                      static_cast<std::size_t>(x)] =
              static_cast<std::uint16_t>((byte >> (7 - x % 8)) & 1u);
        }
      }
      break;
    }
    case 5:
    case 6: {
      in.get();
      if (img.maxval < 256) {
        std::vector<char> raw(count);
        if (!in.read(raw.data(), static_cast<std::streamsize>(count)))
          throw IoError(path + ": truncated raw data");
        for (std::size_t i = 0; i < count; ++i)
          img.samples[i] = static_cast<unsigned char>(raw[i]);
      } else {
        std::vector<char> raw(count * 2);
        if (!in.read(raw.data(), static_cast<std::streamsize>(count * 2)))
          throw IoError(path + ": truncated raw data");
        for (std::size_t i = 0; i < count; ++i) {
          unsigned hi = static_cast<unsigned char>(raw[2 * i]);
          unsigned lo = static_cast<unsigned char>(raw[2 * i + 1]);
          img.samples[i] = static_cast<std::uint16_t>((hi << 8) | lo);
        }
      }
      for (auto s : img.samples)
        if (s > img.maxval) throw IoError(path + ": sample exceeds maxval");
      break;
    }
    default:
      throw IoError(path + ": unsupported netpbm format");
  }
  return img;
}

void write_pbm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& black_bits) {
  if (black_bits.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("write_pbm: size mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write image: " + path);
  out << "P4\n" << width << ' ' << height << '\n';
  const int row_bytes = (width + 7) / 8;
  std::vector<char> row(static_cast<std::size_t>(row_bytes));
  for (int y = 0; y < height; ++y) {
    std::fill(row.begin(), row.end(), 0);
    for (int x = 0; x < width; ++x) {
      if (black_bits[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                     static_cast<std::size_t>(x)])
        row[static_cast<std::size_t>(x / 8)] |= static_cast<char>(0x80 >> (x % 8));
    }
    out.write(row.data(), row_bytes);
  }
  if (!out) throw IoError("write failed: " + path);
}

void write_pgm(const std::string& path, int width, int height, int maxval,
               const std::vector<std::uint8_t>& values) {
  if (values.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("write_pgm: size mismatch");
  if (maxval < 1 || maxval > 255) throw std::invalid_argument("write_pgm: bad maxval");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write image: " + path);
  out << "P5\n" << width << ' ' << height << '\n' << maxval << '\n';
  out.write(reinterpret_cast<const char*>(values.data()),
            static_cast<std::streamsize>(values.size()));
  if (!out) throw IoError("write failed: " + path);
}

void write_ppm(const std::string& path, int width, int height,
               const std::vector<std::uint8_t>& rgb) {
  if (rgb.size() != 3 * static_cast<std::size_t>(width) * static_cast<std::size_t>(height))
    throw std::invalid_argument("write_ppm: size mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write image: " + path);
  out << "P6\n" << width << ' ' << height << "\n255\n";
  out.write(reinterpret_cast<const char*>(rgb.data()), static_cast<std::streamsize>(rgb.size()));
  if (!out) throw IoError("write failed: " + path);
}

SecretImage load_gray(const std::string& path, int g) {
  if (g < 2) throw std::invalid_argument("load_gray: g must be >= 2");
  PnmImage img = read_pnm(path);
  if (img.format != 2 && img.format != 5)
    throw IoError(path + ": expected a PGM (P2/P5) secret image");
  SecretImage secret;
  secret.width = img.width;
  secret.height = img.height;
  secret.color = false;
  secret.levels = g;
  secret.pixels.resize(img.samples.size());
  for (std::size_t i = 0; i < img.samples.size(); ++i) {
    long level = static_cast<long>(img.samples[i]) * g / (img.maxval + 1);
    secret.pixels[i] = static_cast<std::uint8_t>(level);
  }
  return secret;
}

SecretImage load_color(const std::string& path, const std::vector<Rgb>& palette) {
  if (palette.size() < 2) throw std::invalid_argument("load_color: palette needs >= 2 colors");
  if (palette.size() > 254) throw std::invalid_argument("load_color: palette too large");
  for (std::size_t i = 0; i < palette.size(); ++i) {
    if (palette[i] == Rgb{0, 0, 0})
      throw std::invalid_argument("load_color: palette entry equals reserved black");
    for (std::size_t j = i + 1; j < palette.size(); ++j)
      if (palette[i] == palette[j])
        throw std::invalid_argument("load_color: duplicate palette entries");
  }
  PnmImage img = read_pnm(path);
  if (img.format != 3 && img.format != 6)
    throw IoError(path + ": expected a PPM (P3/P6) secret image");
  if (img.maxval != 255) throw IoError(path + ": color secrets must use maxval 255");

  SecretImage secret;
  secret.width = img.width;
  secret.height = img.height;
  secret.color = true;
  secret.levels = static_cast<int>(palette.size());
  secret.palette = palette;
  secret.pixels.resize(static_cast<std::size_t>(img.width) * static_cast<std::size_t>(img.height));
  std::string offenders;
  int offender_count = 0;
  for (std::size_t i = 0; i < secret.pixels.size(); ++i) {
    Rgb px{static_cast<std::uint8_t>(img.samples[3 * i]),
           static_cast<std::uint8_t>(img.samples[3 * i + 1]),
           static_cast<std::uint8_t>(img.samples[3 * i + 2])};
    auto it = std::find(palette.begin(), palette.end(), px);
    if (it == palette.end()) {
      if (offender_count < 8) {
        offenders += " (" + std::to_string(i % static_cast<std::size_t>(img.width)) + "," +
                     std::to_string(i / static_cast<std::size_t>(img.width)) + ")";
      }
      ++offender_count;
      continue;
    }
    secret.pixels[i] = static_cast<std::uint8_t>(it - palette.begin());
  }
  if (offender_count > 0)
    throw IoError(path + ": " + std::to_string(offender_count) +
                  " pixels outside the palette, first at" + offenders);
  return secret;
}

void write_share(const ShareImage& share, const std::string& image_path) {
  const int plane_width = static_cast<int>(share.width * share.s);
  if (share.plane.size() !=
      static_cast<std::size_t>(plane_width) * static_cast<std::size_t>(share.height))
    throw std::invalid_argument("write_share: plane size mismatch");

  if (share.color) {
    std::vector<std::uint8_t> rgb(share.plane.size() * 3);
    for (std::size_t i = 0; i < share.plane.size(); ++i) {
      Rgb px{0, 0, 0};
      std::uint8_t code = share.plane[i];
      if (code != 0xFF) {
        if (code >= share.palette.size())
          throw std::invalid_argument("write_share: symbol outside palette");
        px = share.palette[code];
      }
      rgb[3 * i] = px[0];
      rgb[3 * i + 1] = px[1];
      rgb[3 * i + 2] = px[2];
    }
    write_ppm(image_path, plane_width, share.height, rgb);
  } else {
    write_pbm(image_path, plane_width, share.height, share.plane);
  }

  std::ofstream meta(meta_path(image_path));
  if (!meta) throw IoError("cannot write share metadata: " + meta_path(image_path));
  meta << "format=vcs-share-v1\n";
  meta << "kind=" << share.scheme_kind << '\n';
  meta << "scheme_hash=" << share.scheme_hash << '\n';
  meta << "share_index=" << share.share_index << '\n';
  meta << "shares=" << share.n << '\n';
  meta << "k=" << share.k << '\n';
  meta << "s=" << share.s << '\n';
  meta << "seed=" << share.seed << '\n';
  meta << "layout=h1xs\n";
  meta << "secret_width=" << share.width << '\n';
  meta << "secret_height=" << share.height << '\n';
  meta << "color=" << (share.color ? 1 : 0) << '\n';
  if (share.color) {
    meta << "palette=";
    for (std::size_t i = 0; i < share.palette.size(); ++i)
      meta << (i ? "," : "") << rgb_to_hex(share.palette[i]);
    meta << '\n';
  }
  if (!meta) throw IoError("write failed: " + meta_path(image_path));
}

ShareImage read_share(const std::string& image_path) {
  auto kv = read_meta(meta_path(image_path));
  const std::string& mp = meta_path(image_path);
  if (meta_get(kv, "format", mp) != "vcs-share-v1") throw IoError(mp + ": unknown share format");
  if (meta_get(kv, "layout", mp) != "h1xs") throw IoError(mp + ": unknown subpixel layout");

  ShareImage share;
  share.scheme_kind = meta_get(kv, "kind", mp);
  share.scheme_hash = meta_get(kv, "scheme_hash", mp);
  share.share_index = std::stoi(meta_get(kv, "share_index", mp));
  share.n = std::stoi(meta_get(kv, "shares", mp));
  share.k = std::stoi(meta_get(kv, "k", mp));
  share.s = std::stol(meta_get(kv, "s", mp));
  share.seed = std::stoull(meta_get(kv, "seed", mp));
  share.width = std::stoi(meta_get(kv, "secret_width", mp));
  share.height = std::stoi(meta_get(kv, "secret_height", mp));
  share.color = meta_get(kv, "color", mp) == "1";
  if (share.s < 1 || share.width < 1 || share.height < 1)
    throw IoError(mp + ": bad share geometry");

  PnmImage img = read_pnm(image_path);
  const long plane_width = share.width * share.s;
  if (img.width != plane_width || img.height != share.height)
    throw IoError(image_path + ": image dimensions do not match metadata");

  if (share.color) {
    std::istringstream pal(meta_get(kv, "palette", mp));
    std::string tok;
    while (std::getline(pal, tok, ',')) share.palette.push_back(rgb_from_hex(tok));
    if (share.palette.empty()) throw IoError(mp + ": empty palette");
    if (img.format != 3 && img.format != 6)
      throw IoError(image_path + ": expected a PPM share");
    if (img.maxval != 255) throw IoError(image_path + ": color share must use maxval 255");
    share.plane.resize(img.samples.size() / 3);
    for (std::size_t i = 0; i < share.plane.size(); ++i) {
      Rgb px{static_cast<std::uint8_t>(img.samples[3 * i]),
             static_cast<std::uint8_t>(img.samples[3 * i + 1]),
             static_cast<std::uint8_t>(img.samples[3 * i + 2])};
      if (px == Rgb{0, 0, 0}) {
        share.plane[i] = 0xFF;
        continue;
      }
      auto it = std::find(share.palette.begin(), share.palette.end(), px);
      if (it == share.palette.end())
        throw IoError(image_path + ": pixel color outside the recorded palette");
      share.plane[i] = static_cast<std::uint8_t>(it - share.palette.begin());
    }
  } else {
    if (img.format != 1 && img.format != 4)
      throw IoError(image_path + ": expected a PBM share");
    share.plane.assign(img.samples.begin(), img.samples.end());
  }
  return share;
}

ShareImage share_from_set(const ShareSet& set, int index) {
  if (index < 0 || index >= static_cast<int>(set.planes.size()))
    throw std::out_of_range("share_from_set: bad index");
  ShareImage share;
  share.share_index = index;
  share.n = set.n;
  share.k = set.k;
  share.s = set.s;
  share.width = set.width;
  share.height = set.height;
  share.color = set.color;
  share.seed = set.seed;
  share.scheme_hash = set.scheme_hash;
  share.scheme_kind = set.scheme_kind;
  share.palette = set.palette;
  share.plane = set.planes[static_cast<std::size_t>(index)];
  return share;
}

ShareSet share_set_from_images(const std::vector<ShareImage>& shares) {
  if (shares.empty()) throw std::invalid_argument("share_set_from_images: no shares");
  const ShareImage& first = shares.front();
  ShareSet set;
  set.n = first.n;
  set.k = first.k;
  set.s = first.s;
  set.width = first.width;
  set.height = first.height;
  set.color = first.color;
  set.seed = first.seed;
  set.scheme_hash = first.scheme_hash;
  set.scheme_kind = first.scheme_kind;
  set.palette = first.palette;
  for (const auto& share : shares) {
    if (share.scheme_hash != set.scheme_hash || share.scheme_kind != set.scheme_kind ||
        share.s != set.s || share.seed != set.seed || share.width != set.width ||
        share.height != set.height || share.color != set.color || share.n != set.n ||
        share.k != set.k || share.palette != set.palette)
      throw IoError("share metadata mismatch: shares come from different encodings");
    set.planes.push_back(share.plane);
  }
  return set;
}

std::string rgb_to_hex(const Rgb& rgb) {
  static const char* digits = "0123456789abcdef";
  std::string out(6, '0');
  for (int i = 0; i < 3; ++i) {
    out[static_cast<std::size_t>(2 * i)] = digits[rgb[static_cast<std::size_t>(i)] >> 4];
    out[static_cast<std::size_t>(2 * i + 1)] = digits[rgb[static_cast<std::size_t>(i)] & 0xF];
  }
  return out;
}

Rgb rgb_from_hex(const std::string& hex) {
  if (hex.size() != 6) throw std::invalid_argument("bad rgb hex literal: " + hex);
  auto nibble = [&](char c) -> unsigned {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw std::invalid_argument("bad rgb hex literal: " + hex);
  };
  Rgb rgb;
  for (int i = 0; i < 3; ++i)
    rgb[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
        (nibble(hex[static_cast<std::size_t>(2 * i)]) << 4) |
        nibble(hex[static_cast<std::size_t>(2 * i + 1)]));
  return rgb;
}

}  // namespace vcs
