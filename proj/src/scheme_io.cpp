#include "vcs/scheme_io.hpp"

#include <fstream>
#include <sstream>

#include "vcs/util.hpp"

namespace vcs {

namespace {

BooleanMatrix read_bool_block(std::istream& in, const char* context) {
  AnyMatrix m = read_matrix_text(in);
  if (auto* b = std::get_if<BooleanMatrix>(&m)) return std::move(*b);
  throw IoError(std::string(context) + ": expected a bin matrix block");
}

ColorMatrix read_color_block(std::istream& in, const char* context) {
  AnyMatrix m = read_matrix_text(in);
  if (auto* c = std::get_if<ColorMatrix>(&m)) return std::move(*c);
  throw IoError(std::string(context) + ": expected a color matrix block");
}

}  // namespace

void write_scheme(std::ostream& out, const BinaryScheme& scheme) {
  out << "VSS " << scheme.k << ' ' << scheme.n << ' ' << scheme.m << '\n';
  write_matrix_text(out, scheme.S0);
  write_matrix_text(out, scheme.S1);
}

void write_scheme(std::ostream& out, const GrayScheme& scheme) {
  out << "GVSS " << scheme.k << ' ' << scheme.n << ' ' << scheme.m_base << ' ' << scheme.g
      << '\n';
  for (const auto& level : scheme.G) write_matrix_text(out, level);
}

void write_scheme(std::ostream& out, const ColorScheme& scheme) {
  out << "CVSS " << scheme.k << ' ' << scheme.n << ' ' << scheme.m_prime << ' ' << scheme.c
      << '\n';
  for (const auto& color : scheme.C) write_matrix_text(out, color);
}

std::string scheme_to_string(const AnyScheme& scheme) {
  std::ostringstream out;
  std::visit([&](const auto& s) { write_scheme(out, s); }, scheme);
  return out.str();
}

RawScheme read_scheme_raw(std::istream& in) {
  RawScheme raw;
  if (!(in >> raw.kind)) throw IoError("scheme file: missing header");
  if (raw.kind == "VSS") {
    if (!(in >> raw.k >> raw.n >> raw.m)) throw IoError("VSS header: expected 'k n m'");
    for (int i = 0; i < 2; ++i) {
      raw.bool_blocks.push_back(read_bool_block(in, "VSS"));
      if (raw.bool_blocks.back().rows() != raw.n || raw.bool_blocks.back().cols() != raw.m)
        throw IoError("VSS: matrix shape does not match header");
    }
    return raw;
  }
  if (raw.kind == "GVSS") {
    if (!(in >> raw.k >> raw.n >> raw.m >> raw.g)) throw IoError("GVSS header: expected 'k n m g'");
    if (raw.g < 2) throw IoError("GVSS header: g must be >= 2");
    for (int i = 0; i < raw.g; ++i) {
      raw.bool_blocks.push_back(read_bool_block(in, "GVSS"));
      if (raw.bool_blocks.back().rows() != raw.n)
        throw IoError("GVSS: level row count does not match header");
    }
    return raw;
  }
  if (raw.kind == "CVSS") {
    if (!(in >> raw.k >> raw.n >> raw.m >> raw.c)) throw IoError("CVSS header: expected 'k n m c'");
    if (raw.c < 2) throw IoError("CVSS header: c must be >= 2");
    for (int i = 0; i < raw.c; ++i) {
      raw.color_blocks.push_back(read_color_block(in, "CVSS"));
      if (raw.color_blocks.back().rows() != raw.n || raw.color_blocks.back().cols() != raw.m ||
          raw.color_blocks.back().palette_size() != raw.c)
        throw IoError("CVSS: matrix block does not match header");
    }
    return raw;
  }
  throw IoError("scheme file: unknown kind '" + raw.kind + "'");
}

AnyScheme read_scheme(std::istream& in) {
  RawScheme raw = read_scheme_raw(in);
  if (raw.kind == "VSS") {
    BooleanMatrix s0 = std::move(raw.bool_blocks[0]);
    BooleanMatrix s1 = std::move(raw.bool_blocks[1]);
    return binary_scheme_from_matrices(std::move(s0), std::move(s1), raw.k);
  }
  if (raw.kind == "GVSS") return gray_scheme_from_matrices(raw.k, raw.m, std::move(raw.bool_blocks));
  return color_scheme_from_matrices(raw.k, std::move(raw.color_blocks));
}

AnyScheme load_scheme_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scheme file: " + path);
  return read_scheme(in);
}

void save_scheme_file(const std::string& path, const AnyScheme& scheme) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scheme file: " + path);
  out << scheme_to_string(scheme);
  if (!out) throw IoError("write failed: " + path);
}

std::string scheme_hash(const AnyScheme& scheme) {
  return to_hex(fnv1a64(scheme_to_string(scheme)));
}

}  // namespace vcs
